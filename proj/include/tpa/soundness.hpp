#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tpa/diagram.hpp"

namespace tpa {

struct SoundnessOptions {
  int triples = 500;   // associativity
  int products = 200;  // against the polynomial representation
  int polys = 5;       // per product
  int words = 200;     // random generic words for the Bruhat bound
  int max_degree = 4;  // above the minimal degree, for random elements
  uint64_t seed = 1;
};

struct SoundnessReport {
  int triples = 0, assoc_failures = 0;
  int products = 0, oracle_checks = 0, oracle_failures = 0, oracle_nonzero = 0;
  int words = 0, bruhat_failures = 0, leading_failures = 0;
  bool ok() const { return assoc_failures == 0 && oracle_failures == 0 && bruhat_failures == 0 && leading_failures == 0; }
  std::string summary() const;
};

/// Random element of bottom T~ top: a few basis diagrams with small
/// integer coefficients, degrees up to max_degree above the minimum.
Element random_element(TildeAlgebra& A, std::mt19937_64& rng, const Idem& bottom, const Idem& top, int max_degree);
Poly random_poly(int nvars, std::mt19937_64& rng);

/// Rewriting checks on the block of T~ with the given content, every
/// idempotent (violating ones included):
///   (ab)c = a(bc) on random triples;
///   the polynomial representation of ab is that of a after b;
///   every diagram of a straightened word lies below the Demazure product
///   of its crossings in Bruhat order, and a reduced word keeps its own
///   permutation exactly once.
SoundnessReport soundness_check(TildeAlgebra& A, const RootVector& content, const SoundnessOptions& opt);

}  // namespace tpa
