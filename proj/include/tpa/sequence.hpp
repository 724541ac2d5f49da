#pragma once

#include <string>
#include <vector>

#include "tpa/cartan.hpp"

namespace tpa {

/// Sequence data (I, kappa): black labels I (node indices, left to right) and
/// red placements kappa, red j sitting immediately right of black kappa[j].
struct Idem {
  std::vector<int> I;
  std::vector<int> kappa;

  int n() const { return static_cast<int>(I.size()); }
  int ell() const { return static_cast<int>(kappa.size()); }
  /// Weakly increasing with values in [0, n]; throws std::invalid_argument.
  void validate() const;
  /// A black strand lies left of every red strand (with no reds at all,
  /// any black strand qualifies).
  bool violating() const { return ell() > 0 ? kappa[0] > 0 : n() > 0; }
  RootVector content(int rank) const;

  /// Merged left-to-right strand codes: black label i >= 0, red j -> -(j+1).
  std::vector<int> merged() const;
  static Idem from_merged(const std::vector<int>& codes);

  std::string to_string(const CartanDatum& datum) const;
  static Idem parse(const CartanDatum& datum, const std::string& text);

  friend bool operator==(const Idem& a, const Idem& b) { return a.I == b.I && a.kappa == b.kappa; }
  friend bool operator!=(const Idem& a, const Idem& b) { return !(a == b); }
  friend bool operator<(const Idem& a, const Idem& b) {
    return a.I != b.I ? a.I < b.I : a.kappa < b.kappa;
  }
};

inline bool is_red(int code) { return code < 0; }
inline int red_index(int code) { return -code - 1; }
inline int red_code(int j) { return -(j + 1); }

/// All distinct orderings of a label multiset, lexicographic.
std::vector<std::vector<int>> sequences_with_content(const RootVector& content);
/// All weakly increasing kappa: [0,ell) -> [0,n]; optionally only kappa[0] = 0.
std::vector<std::vector<int>> all_kappas(int n, int ell, bool nonviolating_only);
/// Every idempotent with the given black content and ell reds.
std::vector<Idem> idempotents_with_content(const RootVector& content, int ell, bool nonviolating_only);

}  // namespace tpa
