#include <doctest.h>

#include "tpa/cyclotomic.hpp"
#include "tpa/hecke.hpp"

using namespace tpa;

namespace {

AffineElem mono(int d, const std::vector<int>& a, SPerm w) {
  Poly p = Poly::constant(d, 1).times_monomial(a);
  return {{std::move(w), p}};
}

bool is_zero(const CyclotomicHecke::Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("affine Hecke straightening") {
  // s_1 x_1 = x_2 s_1 - 1
  auto lhs = affine_multiply(mono(2, {0, 0}, {1, 0}), mono(2, {1, 0}, {0, 1}), 2);
  AffineElem want = mono(2, {0, 1}, {1, 0});
  want[{0, 1}] = Poly::constant(2, -1);
  CHECK(lhs == want);
  // s_1 x_2 = x_1 s_1 + 1
  auto rhs = affine_multiply(mono(2, {0, 0}, {1, 0}), mono(2, {0, 1}, {0, 1}), 2);
  AffineElem want2 = mono(2, {1, 0}, {1, 0});
  want2[{0, 1}] = Poly::constant(2, 1);
  CHECK(rhs == want2);
  // s_1^2 = 1 and x's commute past the identity
  CHECK(affine_multiply(mono(3, {0, 0, 0}, {1, 0, 2}), mono(3, {0, 0, 0}, {1, 0, 2}), 3) == mono(3, {0, 0, 0}, {0, 1, 2}));
  CHECK(perm_word({2, 1, 0}).size() == 3);
  CHECK(perm_compose({1, 0, 2}, {0, 2, 1}) == SPerm{1, 2, 0});
}

TEST_CASE("cyclotomic quotient dimensions and relations") {
  for (auto lam : std::vector<std::vector<int>>{{1}, {2}, {1, 0}, {1, 1}, {0, 2}})
    for (int d = 0; d <= 3; ++d) {
      CyclotomicHecke H(lam, d);
      int N = H.level(), want = 1;
      for (int k = 1; k <= d; ++k) want *= N * k;
      CAPTURE(d);
      CHECK(H.dim() == want);
      CHECK(H.relation_failures().empty());
    }
  CHECK_THROWS_AS(CyclotomicHecke({0, 0}, 1), std::invalid_argument);
}

TEST_CASE("level one: x_1 is the scalar of its node") {
  CyclotomicHecke H({1, 0}, 2);
  auto x1 = H.apply(H.left_x(0), H.one());
  CHECK(x1 == H.one());
  CyclotomicHecke G({0, 1}, 1);
  auto y = G.apply(G.left_x(0), G.one());
  CHECK(y[0] == 2);
}

TEST_CASE("weight idempotents") {
  CyclotomicHecke H({1}, 1);
  auto E = H.weight_idempotents();
  REQUIRE(E.size() == 1);
  CHECK(E.count({1}) == 1);
  CHECK(E.at({1}) == H.one());
  CHECK(E.count({2}) == 0);
  CHECK(H.block_dim({1}, {1}) == 1);
  CHECK(H.block_dim({2}, {2}) == 0);

  for (auto lam : std::vector<std::vector<int>>{{2}, {1, 1}}) {
    CyclotomicHecke G(lam, 3);
    auto F = G.weight_idempotents();
    CyclotomicHecke::Vec sum(G.dim(), 0);
    int total = 0;
    for (const auto& [I, e] : F) {
      for (int i = 0; i < G.dim(); ++i) sum[i] += e[i];
      CHECK(G.multiply(e, e) == e);
      for (const auto& [J, f] : F)
        if (I != J) CHECK(is_zero(G.multiply(e, f)));
      for (const auto& [J, f] : F) total += G.block_dim(I, J);
      // x_1 spectrum sits on the nodes of lambda
      REQUIRE(I[0] >= 1);
      REQUIRE(I[0] <= static_cast<int>(lam.size()));
      CHECK(lam[I[0] - 1] > 0);
      auto K = G.nilpotency(I);
      REQUIRE(K.size() == 3);
      CHECK(K[0] <= lam[I[0] - 1]);
    }
    CHECK(sum == G.one());
    CHECK(total == G.dim());
  }
}

TEST_CASE("Hecke blocks against the one-red-strand algebra") {
  struct Case {
    const char* datum;
    const char* lambda;
    int d;
  };
  for (auto c : std::vector<Case>{{"sl2", "1", 3}, {"sl2", "2", 2}, {"sl3", "1,0", 3}, {"sl3", "1,1", 2}}) {
    auto D = CartanDatum::preset(c.datum);
    auto lam = parse_lambda(D, c.lambda);
    auto R = bk_check(D, lam[0], c.d);
    CAPTURE(c.datum);
    CAPTURE(c.lambda);
    CHECK(R.ok());
    CHECK(R.mismatches == 0);
  }
  auto B2 = CartanDatum::preset("B2");
  CHECK_THROWS_AS(bk_check(B2, B2.fundamental(0), 1), std::invalid_argument);
}
