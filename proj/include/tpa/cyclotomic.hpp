#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "tpa/diagram.hpp"
#include "tpa/linalg.hpp"
#include "tpa/qtensor.hpp"

namespace tpa {

/// Raised when a computed dimension exceeds the proven upper bound; always a bug.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Which submodule is divided out of a component e T~ e'.
///   Violating: the two-sided ideal of diagrams with a violating strand.
///   Standard:  that ideal plus the right submodule of e T~ generated by
///              diagrams with a left crossing and no right crossing.
enum class Quotient { Violating, Standard };

struct GradedDims {
  LaurentPoly dims;
  bool complete = true;  // false when the degree cap stopped the scan
  int lo = 0, hi = -1;   // degrees scanned
};

struct ScanOptions {
  int tail = 3;
  int max_degree = 40;
};

/// Degree-by-degree quotients of the components of T~ by exact row reduction.
template <class F>
class QuotientEngine {
 public:
  using S = typename F::S;
  using Row = typename RowSpace<F>::Row;

  struct Component {
    std::vector<Diagram> basis;
    std::unordered_map<Diagram, int, DiagramHash> index;
    std::unique_ptr<RowSpace<F>> kernel;  // null when the whole component dies
    std::vector<int> reps;                // columns spanning the quotient
    std::vector<int> rep_of;              // column -> position in reps, or -1
    int dim() const { return static_cast<int>(reps.size()); }
  };

  QuotientEngine(TildeAlgebra& A, F field) : A_(A), field_(std::move(field)) {}

  TildeAlgebra& algebra() { return A_; }
  const F& field() const { return field_; }

  /// Right-module generators of the divided-out part of e T~, with degrees.
  std::vector<std::pair<Diagram, int>> generators(const Idem& e, Quotient kind);

  std::shared_ptr<const Component> component(const Idem& bottom, const Idem& top, int d, Quotient kind);

  /// Quotient coordinates of a homogeneous element of bottom T~ top in degree d.
  Row coords(const Element& x, const Idem& bottom, const Idem& top, int d, Quotient kind);

  /// Graded dimension of the quotient of bottom T~ top, scanning upward from
  /// the minimal degree until `target` (an upper bound at q=1) is reached and
  /// then `tail` further degrees vanish.
  GradedDims graded_dim(const Idem& bottom, const Idem& top, Quotient kind, const Int& target,
                        const ScanOptions& opt);

  /// Kernel of the component times each dot and crossing on top stays in
  /// the kernel of the target component.
  bool right_closed(const Idem& bottom, const Idem& top, int d, Quotient kind);

  size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

 private:
  Row to_row(const Element& x, const Component& c) const;

  TildeAlgebra& A_;
  F field_;
  mutable std::mutex mu_;
  std::map<std::tuple<uint32_t, uint32_t, int, int>, std::shared_ptr<const Component>> cache_;
};

// ------------------------------------------------------------------ graded homs

/// Predicted graded dimension of Hom(P_a, P_b) from the tensor side.
LaurentPoly hom_prediction(const TensorSpace& V, const Idem& a, const Idem& b);
/// Predicted graded dimension of Hom(P_J, S_I).
LaurentPoly standard_prediction(const TensorSpace& V, const Idem& J, const Idem& I);

/// Hom(P_a, P_b) = e_b T e_a.
template <class F>
GradedDims graded_hom(QuotientEngine<F>& Q, const TensorSpace& V, const Idem& a, const Idem& b,
                      const ScanOptions& opt) {
  return Q.graded_dim(b, a, Quotient::Violating, hom_prediction(V, a, b).eval_at_1(), opt);
}

/// Hom(P_J, S_I) = S_I e_J.
template <class F>
GradedDims standard_hom(QuotientEngine<F>& Q, const TensorSpace& V, const Idem& J, const Idem& I,
                        const ScanOptions& opt) {
  return Q.graded_dim(I, J, Quotient::Standard, standard_prediction(V, J, I).eval_at_1(), opt);
}

// ------------------------------------------------------------------ filtration

struct FiltrationTerm {
  Idem target;
  int degree;  // degree of the diagram moving the black strands left
};

/// Each black strand picks a block at or left of its own; order inside a
/// block is kept.
std::vector<FiltrationTerm> filtration_terms(const TildeAlgebra& A, const Idem& e);

struct FiltrationCertificate {
  std::vector<FiltrationTerm> terms;
  bool tensor_minus = false;  // v = sum q^{-deg} s
  bool tensor_plus = false;   // v = sum q^{+deg} s
  bool dims_minus = false;    // Hom(P_J,P) = sum q^{-deg} Hom(P_J,S) for all J
  bool dims_plus = false;
  std::string detail;
};

template <class F>
FiltrationCertificate standard_filtration_check(QuotientEngine<F>& Q, const TensorSpace& V, const Idem& e,
                                                const ScanOptions& opt);

// ------------------------------------------------------------------ blocks

/// Finite-dimensional block of T with a homogeneous basis of coset
/// representatives and its structure constants.
template <class F>
struct QuotientBlock {
  using S = typename F::S;
  using Vec = std::vector<std::pair<int, S>>;
  struct BasisElem {
    int bottom, top, degree;
    Diagram rep;
  };

  F field;
  RootVector content;
  std::vector<Idem> idems;
  std::vector<BasisElem> basis;
  std::map<std::tuple<int, int, int>, int> offset;  // (bottom, top, degree) -> first index
  std::map<std::pair<int, int>, Vec> table;         // nonzero products only
  std::vector<Vec> idem_vec;                         // coordinates of each e(I,kappa)

  explicit QuotientBlock(F f) : field(std::move(f)) {}
  int dim() const { return static_cast<int>(basis.size()); }
  const Vec& product(int i, int j) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec unit() const;
  int idem_index(const Idem& e) const;

 private:
  Vec zero_;
};

/// All nonviolating idempotents with the content, graded Homs scanned against
/// the tensor-side prediction, and the multiplication table.  With
/// check_ideal, also confirms that kernel rows times representatives vanish.
template <class F>
QuotientBlock<F> build_block(QuotientEngine<F>& Q, const TensorSpace& V, const RootVector& content,
                             const ScanOptions& opt, bool check_ideal = false);

/// Coordinates in the block of an arbitrary element of T~.
template <class F>
typename QuotientBlock<F>::Vec block_coords(QuotientEngine<F>& Q, const QuotientBlock<F>& B, const Element& x);

/// Associativity of the table on every triple; returns the number of failures.
template <class F>
int block_associativity_failures(const QuotientBlock<F>& B);

// ------------------------------------------------------------------ single red strand

/// Row space of the cyclotomic ideal generated by y_1^{lambda^{i_1}} e(I)
/// inside the component e(I,0) R e(J,0) in degree d, compared with the
/// violating kernel.  Requires exactly one red strand.
template <class F>
bool cyclotomic_kernel_matches(QuotientEngine<F>& Q, const std::vector<int>& I, const std::vector<int>& J, int d);

struct CentralizerData {
  LaurentPoly y_side;    // graded dim of y_{I,kappa} T^lambda e_J
  LaurentPoly hom_side;  // graded dim of e(I,kappa) T e(J,0)
  int shift = 0;         // y_side = q^shift hom_side when match
  bool match = false;
};

/// y_{I,kappa} = e_I prod_j prod_{k <= kappa(j)} y_k^{lambda_j^{i_k}} (blacks left of red j) in the
/// single-red algebra with weight sum(lambda).
template <class F>
CentralizerData double_centralizer_data(QuotientEngine<F>& multi, QuotientEngine<F>& single,
                                        const TensorSpace& Vmulti, const TensorSpace& Vsingle, const Idem& e,
                                        const std::vector<int>& J, const ScanOptions& opt);

// ------------------------------------------------------------------ Frobenius

struct FrobeniusCertificate {
  bool feasible = false;
  int degree = 0;       // degree where the trace lives
  int functionals = 0;  // dimension of the space of symmetric traces there
  std::string detail;
};

/// Looks for a symmetric functional tau of one degree with tau(ab) = tau(ba)
/// whose pairing is nondegenerate.  Works over the block's own field.
template <class F>
FrobeniusCertificate frobenius_check(const QuotientBlock<F>& B, uint64_t seed);

}  // namespace tpa
