#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tpa/cyclotomic.hpp"

namespace tpa {

struct UnsupportedCharacteristic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A block that was asked for but lies beyond the configured strand bound.
struct BlockMissing : std::out_of_range {
  using std::out_of_range::out_of_range;
};

using QBlock = QuotientBlock<QField>;
using QVec = QBlock::Vec;

/// Graded right module over a block.  Every basis vector v is homogeneous
/// and satisfies v = v e_a for exactly one idempotent a of the block.
struct FinDimModule {
  const QBlock* block = nullptr;
  std::vector<int> idem;    // index into block->idems
  std::vector<int> degree;
  /// (basis vector, block basis element) -> product; zero products omitted
  std::map<std::pair<int, int>, QVec> action;

  int dim() const { return static_cast<int>(idem.size()); }
  QVec act(const QVec& v, int j) const;
  QVec act(const QVec& v, const QVec& a) const;
  /// dim_q M e_a for each idempotent of the block
  std::vector<LaurentPoly> character() const;
  std::vector<int> ungraded_character() const;
  LaurentPoly graded_dim() const;
  /// Number of basis triples with (m a) b != m (a b).
  int relation_failures() const;
};

FinDimModule regular_module(const QBlock& B);
/// Submodule generated by homogeneous vectors.  Its basis, in the
/// coordinates of M, is written to *rows when given.
FinDimModule submodule(const FinDimModule& M, const std::vector<QVec>& gens, std::vector<QVec>* rows = nullptr);
/// M modulo the span of homogeneous vectors spanning a submodule.
FinDimModule quotient(const FinDimModule& M, const std::vector<QVec>& sub);

/// dim Hom_A(M, N), all degrees together.
int hom_dim(const FinDimModule& M, const FinDimModule& N);

/// Jacobson radical by the trace form of the regular representation,
/// one homogeneous component at a time.  Characteristic 0 only.
std::vector<QVec> radical(const QBlock& B);
std::vector<QVec> radical(const QuotientBlock<PField>& B);

struct SimpleModule {
  FinDimModule module;                // shifted so the character is bar invariant when possible
  std::vector<LaurentPoly> character;  // per block idempotent
  std::vector<int> ungraded;
  int shift = 0;
  bool self_dual = false;
};

struct BlockDecomposition {
  std::vector<QVec> radical;
  std::vector<QVec> central_idempotents;  // primitive, of the semisimple quotient
  std::vector<SimpleModule> simples;
};

/// Radical, primitive central idempotents of A/rad and one simple module
/// per idempotent.  Throws IntegrityError when the split fails.
BlockDecomposition decompose(const QBlock& B, uint64_t seed = 1);

/// Simple whose ungraded character is proportional to chi, and the ratio;
/// {-1, 0} when none is.
std::pair<int, int> identify_simple(const BlockDecomposition& D, const std::vector<int>& chi);

struct CrystalStep {
  bool zero = true;
  RootVector content;
  int simple = -1;
  int multiplicity = 0;
};

/// Blocks of one algebra keyed by content, built on demand, with induction,
/// restriction and the crystal operators on their simples.
class ModuleWorkbench {
 public:
  ModuleWorkbench(TildeAlgebra& A, const TensorSpace& V, ScanOptions opt, int max_strands);

  const QBlock& block(const RootVector& c);
  const BlockDecomposition& decomposition(const RootVector& c);

  /// F_i M = M (x)_A nu(1) B, nu adding a strand labelled i at the far right.
  FinDimModule induce(const FinDimModule& M, int i);
  /// E_i N = N nu(1) with A acting through nu.
  FinDimModule restrict_module(const FinDimModule& N, int i);
  FinDimModule cosocle(const FinDimModule& M);
  FinDimModule socle(const FinDimModule& M);

  /// cosoc(F_i L) and soc(E_i L) for the simple number s of content c.
  CrystalStep crystal_f(const RootVector& c, int s, int i);
  CrystalStep crystal_e(const RootVector& c, int s, int i);

 private:
  struct NuData {
    const QBlock* source;
    const QBlock* target;
    std::vector<int> idem;     // source idempotent -> target idempotent
    std::vector<QVec> images;  // source basis element -> target coordinates
  };
  const NuData& nu(const RootVector& c, int i);
  const QBlock& block_of(const FinDimModule& M);
  CrystalStep classify(const FinDimModule& M, const RootVector& c);

  TildeAlgebra& A_;
  const TensorSpace& V_;
  ScanOptions opt_;
  int max_strands_;
  QuotientEngine<QField> Q_;
  std::map<RootVector, std::unique_ptr<QBlock>> blocks_;
  std::map<RootVector, std::unique_ptr<BlockDecomposition>> decomps_;
  std::map<std::pair<RootVector, int>, NuData> nus_;
};

}  // namespace tpa
