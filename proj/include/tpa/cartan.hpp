#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tpa/poly.hpp"

namespace tpa {

struct DatumMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Weight recorded by its coroot pairings lambda^i.
struct Weight {
  std::vector<int> coords;
  bool dominant() const;
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

/// Element of the root lattice in the basis of simple roots.
struct RootVector {
  std::vector<int> coords;
  bool positive() const;
  friend bool operator==(const RootVector& a, const RootVector& b) { return a.coords == b.coords; }
  friend bool operator<(const RootVector& a, const RootVector& b) { return a.coords < b.coords; }
};

/// Symmetrizable Cartan datum.  cartan[i][j] = alpha_j^vee(alpha_i), and the
/// symmetrizers satisfy d_i c_ji = d_j c_ij.
class CartanDatum {
 public:
  CartanDatum(std::vector<std::string> nodes, std::vector<std::vector<int>> cartan, std::vector<int> sym);

  static CartanDatum preset(const std::string& name);

  int rank() const { return static_cast<int>(nodes_.size()); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  int node_index(const std::string& name) const;
  int c(int i, int j) const { return cartan_[i][j]; }
  int d(int i) const { return sym_[i]; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& sym() const { return sym_; }

  /// <alpha_i, alpha_j> = d_j c_ij
  int root_pairing(int i, int j) const { return sym_[j] * cartan_[i][j]; }

  int pairing(const RootVector& a, const RootVector& b) const;
  int pairing(const RootVector& a, const Weight& w) const;
  int pairing(const Weight& w, const RootVector& a) const { return pairing(a, w); }

  /// Coroot pairings of a root-lattice element.
  Weight root_to_weight(const RootVector& a) const;
  Weight simple_root_weight(int i) const;
  Weight fundamental(int i) const;
  Weight zero_weight() const { return Weight{std::vector<int>(rank(), 0)}; }
  RootVector zero_root() const { return RootVector{std::vector<int>(rank(), 0)}; }

  void check(const Weight& w) const;
  void check(const RootVector& a) const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.cartan_ == b.cartan_ && a.sym_ == b.sym_;
  }

 private:
  std::vector<std::string> nodes_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
};

/// The polynomials Q_ij(u,v).  Q_ii = 0.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(const CartanDatum& datum, std::map<std::pair<int, int>, BiPoly> entries);

  /// Q_ij = u^{-c_ji} + v^{-c_ij}
  static QMatrix default_for(const CartanDatum& datum);

  const BiPoly& entry(int i, int j) const;
  int size() const { return n_; }
  /// Coefficient of u^{-c_ji} in Q_ij, i.e. Q_ij(1,0).
  Int t(int i, int j) const;

  /// Throws ConfigError naming the first failed invariant.
  void validate(const CartanDatum& datum) const;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, BiPoly> entries_;
  BiPoly zero_;
};

QMatrix default_Q(const CartanDatum& datum);

struct LoadedDatum {
  CartanDatum datum;
  QMatrix Q;
};

/// {"nodes":[...],"cartan":[[...]],"d":[...],"Q":{"i,j":[[coeff,uexp,vexp],...]}}
/// "Q" is optional; missing pairs fall back to nothing, so a partial Q is an error.
LoadedDatum load_datum_json(const std::string& text);
std::string datum_to_json(const CartanDatum& datum, const QMatrix& Q);

/// Parses "1;1" or "1,0;0,1" into a list of dominant weights.
std::vector<Weight> parse_lambda(const CartanDatum& datum, const std::string& text);

}  // namespace tpa
