#include "tpa/soundness.hpp"

#include <sstream>

namespace tpa {

std::string SoundnessReport::summary() const {
  std::ostringstream os;
  os << "assoc " << (triples - assoc_failures) << "/" << triples << ", oracle " << (oracle_checks - oracle_failures)
     << "/" << oracle_checks << " (" << oracle_nonzero << " nonzero), bruhat " << (words - bruhat_failures) << "/"
     << words;
  if (leading_failures) os << ", leading term lost " << leading_failures;
  return os.str();
}

Element random_element(TildeAlgebra& A, std::mt19937_64& rng, const Idem& bottom, const Idem& top, int max_degree) {
  int lo = A.min_degree(bottom, top);
  auto basis = A.basis_enumerate(bottom, top, lo, lo + max_degree);
  Element e;
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int t = 0; t < 3 && !basis.empty(); ++t) e.add(basis[rng() % basis.size()], coef(rng));
  return e;
}

Poly random_poly(int nvars, std::mt19937_64& rng) {
  Poly p(nvars);
  for (int t = 0; t < 3; ++t) {
    Monomial m(nvars);
    for (auto& x : m) x = static_cast<int>(rng() % 3);
    p.add_term(m, static_cast<int>(rng() % 5) - 2);
  }
  return p;
}

SoundnessReport soundness_check(TildeAlgebra& A, const RootVector& content, const SoundnessOptions& opt) {
  SoundnessReport r;
  auto idems = idempotents_with_content(content, A.ell(), false);
  if (idems.empty()) return r;
  std::mt19937_64 rng(opt.seed);
  auto pick = [&]() -> const Idem& { return idems[rng() % idems.size()]; };

  for (int t = 0; t < opt.triples; ++t) {
    const Idem &e0 = pick(), &e1 = pick(), &e2 = pick(), &e3 = pick();
    Element a = random_element(A, rng, e0, e1, opt.max_degree);
    Element b = random_element(A, rng, e1, e2, opt.max_degree);
    Element c = random_element(A, rng, e2, e3, opt.max_degree);
    ++r.triples;
    if (A.multiply(A.multiply(a, b), c) != A.multiply(a, A.multiply(b, c))) ++r.assoc_failures;
  }

  const int nv = idems.front().n();
  for (int t = 0; t < opt.products; ++t) {
    const Idem &e0 = pick(), &e1 = pick(), &e2 = pick();
    Element a = random_element(A, rng, e0, e1, opt.max_degree);
    Element b = random_element(A, rng, e1, e2, opt.max_degree);
    Element ab = A.multiply(a, b);
    uint32_t t1 = A.intern(e1), t2 = A.intern(e2);
    ++r.products;
    for (int k = 0; k < opt.polys; ++k) {
      Poly f = random_poly(nv, rng);
      Poly lhs = A.poly_rep_apply(ab, t2, f);
      Poly rhs = A.poly_rep_apply(a, t1, A.poly_rep_apply(b, t2, f));
      ++r.oracle_checks;
      if (lhs != rhs) ++r.oracle_failures;
      if (!lhs.is_zero()) ++r.oracle_nonzero;
    }
  }

  for (int t = 0; t < opt.words; ++t) {
    const Idem& e = pick();
    const int n = e.n() + e.ell();
    if (n < 2) break;
    GenericWord g;
    std::vector<int> letters;
    std::vector<int> codes = e.merged();
    for (int len = 0; len < 6; ++len) {
      int k = static_cast<int>(rng() % (n - 1));
      if (is_red(codes[k]) && is_red(codes[k + 1])) continue;
      if (rng() % 3 == 0) {
        int p = static_cast<int>(rng() % n);
        if (!is_red(codes[p])) g.push_back(Event::dot(p));
      }
      g.push_back(Event::cross(k));
      letters.push_back(k);
      std::swap(codes[k], codes[k + 1]);
    }
    Element x = A.straighten(g, e);
    Perm top = demazure_product(n, letters);
    ++r.words;
    bool bad = false;
    for (const auto& [d, c] : x.terms())
      if (!bruhat_leq(d.w, top)) bad = true;
    if (bad) ++r.bruhat_failures;
    Perm w = TildeAlgebra::perm_of_word(n, letters);
    if (TildeAlgebra::length(w) == static_cast<int>(letters.size())) {
      int count = 0;
      for (const auto& [d, c] : x.terms())
        if (d.w == w) ++count;
      if (count != 1) ++r.leading_failures;
    }
  }
  return r;
}

}  // namespace tpa
