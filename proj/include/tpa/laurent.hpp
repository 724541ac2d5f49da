#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tpa {

using Int = mpz_class;

/// Integer Laurent polynomial in q.  Zero coefficients are never stored, so
/// two polynomials are equal iff their term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<int, Int>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Int& c);  // NOLINT

  static LaurentPoly monomial(int exp, const Int& coeff = 1);
  static LaurentPoly q(int exp = 1) { return monomial(exp); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(int exp) const;
  int min_exp() const;  // requires non-zero
  int max_exp() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Int& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  void add_term(int exp, const Int& c);
  LaurentPoly shifted(int s) const;  // multiply by q^s

  /// Exact division; throws std::domain_error when b does not divide *this.
  LaurentPoly exact_div(const LaurentPoly& b) const;

  /// q -> q^{-1}
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return bar() == *this; }
  Int eval_at_1() const;
  /// Value at an integer point (exponents may be negative, so rational).
  mpq_class eval(const mpq_class& x) const;

  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  Terms terms_;
};

LaurentPoly bar(const LaurentPoly& a);
Int eval_at_1(const LaurentPoly& a);

/// Quantum integer (q^{dn} - q^{-dn}) / (q^d - q^{-d}).  Negative n is
/// rejected; use qint_signed when [ -n ] = -[ n ] is wanted.
LaurentPoly qint(int n, int d = 1);
LaurentPoly qint_signed(int n, int d = 1);

}  // namespace tpa
