#include <doctest.h>

#include "tpa/modules.hpp"

using namespace tpa;

namespace {

struct Bench {
  CartanDatum D;
  std::vector<Weight> lam;
  TildeAlgebra A;
  TensorSpace V;
  ModuleWorkbench W;
  Bench(const char* preset, const char* lambda, int max_strands)
      : D(CartanDatum::preset(preset)),
        lam(parse_lambda(D, lambda)),
        A(D, QMatrix::default_for(D), lam),
        V(D, lam),
        W(A, V, ScanOptions{}, max_strands) {}
};

RootVector rv(std::initializer_list<int> c) { return RootVector{std::vector<int>(c)}; }

}  // namespace

TEST_CASE("sl2 (1,1): the bottom block is a matrix algebra, the middle one has two simples") {
  Bench b("sl2", "1;1", 3);
  const auto& low = b.W.decomposition(rv({2}));
  CHECK(b.W.block(rv({2})).dim() == 9);
  CHECK(low.radical.empty());
  REQUIRE(low.simples.size() == 1);
  CHECK(low.simples[0].module.dim() == 3);
  const auto& mid = b.W.decomposition(rv({1}));
  CHECK(mid.simples.size() == 2);
  const auto& top = b.W.decomposition(rv({0}));
  REQUIRE(top.simples.size() == 1);
  CHECK(top.simples[0].module.dim() == 1);
}

TEST_CASE("local blocks K[y]/y^n") {
  for (int n = 1; n <= 4; ++n) {
    Bench b("sl2", std::to_string(n).c_str(), 2);
    const auto& B = b.W.block(rv({1}));
    CHECK(B.dim() == n);
    const auto& D = b.W.decomposition(rv({1}));
    CHECK(static_cast<int>(D.radical.size()) == n - 1);
    for (const auto& v : D.radical)
      for (const auto& [k, x] : v) CHECK(B.basis[k].degree > 0);
    CHECK(D.simples.size() == 1);
  }
}

TEST_CASE("the radical needs characteristic 0") {
  auto D = CartanDatum::preset("sl2");
  auto lam = parse_lambda(D, "1;1");
  TildeAlgebra A(D, QMatrix::default_for(D), lam);
  TensorSpace V(D, lam);
  QuotientEngine<PField> Q(A, PField(101));
  auto B = build_block(Q, V, rv({1}), ScanOptions{});
  CHECK_THROWS_AS(radical(B), UnsupportedCharacteristic);
}

TEST_CASE("simples: count, self duality, module axioms") {
  struct C {
    const char* p;
    const char* l;
    int n;
  };
  for (const auto& c : {C{"sl2", "2;1", 3}, C{"sl2", "3", 3}, C{"sl3", "1,0;0,1", 3}}) {
    Bench b(c.p, c.l, c.n);
    std::vector<RootVector> cs{RootVector{std::vector<int>(b.D.rank(), 0)}};
    for (int r = 0; r < b.D.rank(); ++r) {
      std::vector<RootVector> nx;
      for (const auto& x : cs)
        for (int k = 0; k <= c.n; ++k) {
          RootVector y = x;
          y.coords[r] = k;
          int s = 0;
          for (int v : y.coords) s += v;
          if (s <= c.n) nx.push_back(y);
        }
      cs = nx;
    }
    for (const auto& ct : cs) {
      const auto& D = b.W.decomposition(ct);
      CHECK(static_cast<int>(D.simples.size()) == b.V.weight_dim_content(ct));
      for (const auto& s : D.simples) {
        CHECK(s.self_dual);
        CHECK(s.module.relation_failures() == 0);
        CHECK(hom_dim(s.module, s.module) == 1);
      }
      for (size_t s = 0; s < D.simples.size(); ++s)
        for (size_t t = 0; t < D.simples.size(); ++t)
          if (s != t) CHECK(hom_dim(D.simples[s].module, D.simples[t].module) == 0);
    }
  }
}

TEST_CASE("induction and restriction") {
  Bench b("sl2", "1", 3);
  const auto& top = b.W.decomposition(rv({0}));
  FinDimModule F = b.W.induce(top.simples[0].module, 0);
  CHECK(F.dim() == 1);
  CHECK(F.relation_failures() == 0);
  // beyond the integrable range
  CHECK(b.W.induce(F, 0).dim() == 0);
  FinDimModule zero;
  zero.block = &b.W.block(rv({0}));
  CHECK(b.W.induce(zero, 0).dim() == 0);
  CHECK(b.W.restrict_module(top.simples[0].module, 0).dim() == 0);

  // Hom(F_i M, N) = Hom(M, E_i N) on simples
  Bench c("sl2", "2;1", 3);
  for (int n = 0; n < 3; ++n) {
    const auto& Dm = c.W.decomposition(rv({n}));
    const auto& Dn = c.W.decomposition(rv({n + 1}));
    for (const auto& M : Dm.simples) {
      FinDimModule FM = c.W.induce(M.module, 0);
      CHECK(FM.relation_failures() == 0);
      for (const auto& N : Dn.simples) {
        FinDimModule EN = c.W.restrict_module(N.module, 0);
        CHECK(hom_dim(FM, N.module) == hom_dim(M.module, EN));
      }
    }
  }
}

TEST_CASE("crystal operators") {
  Bench b("sl2", "2", 3);
  // the string from the top simple has three nodes
  CHECK(b.W.crystal_e(rv({0}), 0, 0).zero);
  int s = 0, len = 1;
  RootVector c = rv({0});
  while (true) {
    auto f = b.W.crystal_f(c, s, 0);
    if (f.zero) break;
    auto back = b.W.crystal_e(f.content, f.simple, 0);
    CHECK_FALSE(back.zero);
    CHECK(back.simple == s);
    CHECK(back.content == c);
    c = f.content;
    s = f.simple;
    ++len;
  }
  CHECK(len == 3);

  // B(1) x B(1) = B(2) + B(0): one simple of weight 0 is killed by both operators
  Bench t("sl2", "1;1", 3);
  int isolated = 0;
  for (int k = 0; k < 2; ++k) {
    auto f = t.W.crystal_f(rv({1}), k, 0);
    auto e = t.W.crystal_e(rv({1}), k, 0);
    if (f.zero && e.zero) ++isolated;
  }
  CHECK(isolated == 1);
}
