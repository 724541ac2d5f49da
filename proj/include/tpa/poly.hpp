#pragma once

#include <map>
#include <string>
#include <vector>

#include "tpa/laurent.hpp"

namespace tpa {

using Monomial = std::vector<int>;

/// Sparse multivariate polynomial with integer coefficients in a fixed number
/// of variables y_0..y_{n-1}.
class Poly {
 public:
  using Terms = std::map<Monomial, Int>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const Int& c);
  static Poly variable(int nvars, int k, int power = 1);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for zero

  void add_term(const Monomial& m, const Int& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Int& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly times_monomial(const Monomial& m) const;
  /// Exchange variables k and k+1.
  Poly swapped(int k) const;
  /// (f - s_k f) / (y_k - y_{k+1}), computed monomial by monomial.
  Poly demazure(int k) const;

  std::string to_string() const;

 private:
  int nvars_;
  Terms terms_;
};

/// Divided difference of a monomial pair: (x^p y^r - x^r y^p)/(x - y) as a
/// list of (exponent of x, exponent of y, sign).
struct DividedTerm {
  int px, py, sign;
};
std::vector<DividedTerm> divided_difference(int p, int r);

/// Bivariate polynomial Q(u,v) as coefficient map (uexp, vexp) -> coeff.
using BiPoly = std::map<std::pair<int, int>, Int>;

}  // namespace tpa
