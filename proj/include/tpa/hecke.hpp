#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpa/cartan.hpp"
#include "tpa/linalg.hpp"
#include "tpa/poly.hpp"

namespace tpa {

/// Permutation of {0..d-1} as the list of images.
using SPerm = std::vector<int>;

/// Element of the degenerate affine Hecke algebra H_d written as
/// sum_w P_w(x) w, polynomials to the left.
using AffineElem = std::map<SPerm, Poly>;

/// s_i P = (s_i P) s_i - (d_i P), the divided difference d_i.
AffineElem affine_multiply(const AffineElem& a, const AffineElem& b, int d);
SPerm perm_compose(const SPerm& a, const SPerm& b);  // (a b)(k) = a(b(k))
/// Reduced word (i_1..i_k) with w = s_{i_1} ... s_{i_k}.
std::vector<int> perm_word(const SPerm& w);

/// The cyclotomic quotient H_d / <prod_i (x_1 - (i+1))^{lambda^i}>, node i
/// (0-based) carrying eigenvalue i+1.  Built as a module over itself on
/// the standard monomials x^a w with every a_k < N.
class CyclotomicHecke {
 public:
  using Vec = std::vector<mpq_class>;  // dense, over the standard basis
  using Mat = Matrix<QField>;

  CyclotomicHecke(std::vector<int> lambda, int d);

  int level() const { return N_; }
  int strands() const { return d_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int window() const { return window_; }  // ideal degree bound that sufficed
  const std::vector<std::pair<Monomial, SPerm>>& basis() const { return basis_; }

  const Mat& left_x(int k) const { return lx_.at(k); }
  const Mat& left_s(int i) const { return ls_.at(i); }
  Vec one() const;
  Vec apply(const Mat& m, const Vec& v) const;
  /// b v for the standard basis element b
  Vec left_basis(int b, const Vec& v) const;
  Vec multiply(const Vec& a, const Vec& b) const;

  /// Defining relations on the generator matrices; names of failures.
  std::vector<std::string> relation_failures() const;

  /// Eigenvalue sequence -> e(I), over every sequence with e(I) != 0.
  const std::map<std::vector<int>, Vec>& weight_idempotents() const;
  /// dim e(I) H e(J) for eigenvalue sequences.
  int block_dim(const std::vector<int>& I, const std::vector<int>& J) const;
  /// Per j, the smallest K with (x_j - i_j)^K e(I) = 0; empty when e(I) = 0.
  std::vector<int> nilpotency(const std::vector<int>& I) const;

 private:
  void build();
  const Mat& right_x(int k) const;
  const Mat& op(int id) const;  // left x for id < d, then right x
  /// Basis of the joint generalized eigenspace, as columns.
  std::vector<Vec> joint_space(const std::vector<int>& ops, const std::vector<int>& eig) const;

  std::vector<int> lambda_;
  int d_, N_;
  int window_ = 0;
  std::vector<std::pair<Monomial, SPerm>> basis_;
  std::map<std::pair<Monomial, SPerm>, int> index_;
  std::vector<Mat> lx_, ls_;
  mutable std::vector<Mat> rx_;
  mutable std::optional<std::map<std::vector<int>, Vec>> idems_;
  mutable std::map<std::pair<int, int>, Mat> powers_;
};

struct BKBlock {
  std::vector<int> I, J;  // node sequences, 0-based
  int hecke = 0;          // dim e(I) H e(J), eigenvalues node + 1
  Int klr = 0;            // dim e(I) T e(J) with one red strand, degrees summed
};

struct BKReport {
  int dim = 0, expected_dim = 0;
  std::vector<std::string> relation_failures;
  bool idempotents_ok = false;  // orthogonal, idempotent, summing to 1
  bool cyclotomic_ok = false;   // (x_1 - i_1)^{lambda^{i_1}} e(I) = 0
  std::vector<BKBlock> blocks;
  int mismatches = 0;
  bool ok() const {
    return dim == expected_dim && relation_failures.empty() && idempotents_ok && cyclotomic_ok && mismatches == 0;
  }
};

/// Compares the cyclotomic Hecke algebra with the one-red-strand algebra
/// block by block, for a linearly ordered simply laced type A datum.
BKReport bk_check(const CartanDatum& D, const Weight& lambda, int d);

}  // namespace tpa
