#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "tpa/cartan.hpp"
#include "tpa/laurent.hpp"
#include "tpa/sequence.hpp"

namespace tpa {

/// Letters (i_1,...,i_k) standing for F_{i_k}...F_{i_1} v_h.
using FWord = std::vector<int>;
/// One F-word per tensor factor.
using PureTensor = std::vector<FWord>;

struct TensorVector {
  std::map<PureTensor, LaurentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const PureTensor& t, const LaurentPoly& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const LaurentPoly& c);
  friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.terms == b.terms; }
  friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }
  std::string to_string(const CartanDatum& datum) const;
};

/// Ordered pairs of sequence data mapped to graded dimensions / form values.
struct GradedHomTable {
  std::map<std::pair<Idem, Idem>, LaurentPoly> entries;
  /// entry(a,b) = bar(entry(b,a)) wherever both are present
  bool bar_swap_symmetric() const;
  /// entry(a,b) = entry(b,a); what graded Hom tables actually satisfy, since
  /// flipping diagrams upside down preserves degree
  bool swap_symmetric() const;
  std::string to_csv(const CartanDatum& datum) const;
};

/// The integral tensor product V_{lambda_1} x ... x V_{lambda_ell} with the
/// coproduct action of E_i, F_i and the Shapovalov form.
class TensorSpace {
 public:
  TensorSpace(CartanDatum datum, std::vector<Weight> lambdas);

  const CartanDatum& datum() const { return datum_; }
  const std::vector<Weight>& lambdas() const { return lambdas_; }
  int ell() const { return static_cast<int>(lambdas_.size()); }

  /// v_h x ... x v_h with the first `factors` tensor factors (default all).
  TensorVector highest(int factors = -1) const;
  Weight factor_weight(int j, const FWord& w) const;
  Weight weight(const PureTensor& t) const;

  TensorVector apply_F(int i, const TensorVector& v) const;
  TensorVector apply_E(int i, const TensorVector& v) const;

  /// Sesquilinear, antilinear in the first argument.
  LaurentPoly form(const TensorVector& v, const TensorVector& w) const;
  LaurentPoly form_pure(const PureTensor& x, const PureTensor& y) const;

  TensorVector vkappa(const Idem& e) const;
  /// The pure tensor with the letters of each block in its own factor.
  TensorVector pure(const Idem& e) const;
  /// Same pure tensor for the coproduct F_i x K_i + 1 x F_i (bar of ours),
  /// carried over by the antilinear map fixing every v^kappa_I.  This is
  /// the class of the standard module.
  TensorVector skappa(const Idem& e) const;

  /// Content of sum(lambda) - mu in simple roots; throws if mu is unreachable.
  RootVector content_for_weight(const Weight& mu) const;
  Weight weight_for_content(const RootVector& content) const;
  int weight_dim(const Weight& mu) const;
  int weight_dim_content(const RootVector& content) const;

  /// Table of form(v_a, v_b) over the nonviolating idempotents with content.
  GradedHomTable form_table(const RootVector& content) const;

 private:
  LaurentPoly form_rec(const PureTensor& x, const PureTensor& y) const;
  void apply_E_pure(int i, const PureTensor& t, const LaurentPoly& c, TensorVector& out) const;

  CartanDatum datum_;
  std::vector<Weight> lambdas_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::pair<PureTensor, PureTensor>, LaurentPoly> memo_;
  mutable std::map<Idem, TensorVector> smemo_;
};

/// Rank over Q(q) of a square or rectangular matrix of Laurent polynomials,
/// by fraction-free elimination.
int laurent_matrix_rank(std::vector<std::vector<LaurentPoly>> m);

}  // namespace tpa
