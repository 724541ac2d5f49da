#include <doctest.h>

#include <random>

#include "tpa/qtensor.hpp"

using namespace tpa;

namespace {

TensorVector pure_vec(PureTensor t, LaurentPoly c = 1) {
  TensorVector v;
  v.add(t, c);
  return v;
}

std::vector<TensorVector> spanning(const TensorSpace& V, const RootVector& content) {
  std::vector<TensorVector> out;
  for (const auto& e : idempotents_with_content(content, V.ell(), true)) out.push_back(V.vkappa(e));
  return out;
}

RootVector content_of(int rank, std::initializer_list<int> c) {
  RootVector r{std::vector<int>(c)};
  REQUIRE(static_cast<int>(r.coords.size()) == rank);
  return r;
}

struct Case {
  const char* preset;
  const char* lambda;
  int max_strands;
};

const Case kCases[] = {{"sl2", "1", 3}, {"sl2", "2", 3}, {"sl2", "1;1", 3}, {"sl2", "2;1", 3},
                       {"sl3", "1,0", 3}, {"sl3", "1,0;0,1", 3}, {"B2", "1,0;0,1", 2}};

std::vector<RootVector> contents_up_to(int rank, int n) {
  std::vector<RootVector> out{RootVector{std::vector<int>(rank, 0)}};
  for (int r = 0; r < rank; ++r) {
    std::vector<RootVector> nx;
    for (const auto& c : out)
      for (int k = 0; k <= n; ++k) {
        RootVector d = c;
        d.coords[r] = k;
        int s = 0;
        for (int x : d.coords) s += x;
        if (s <= n) nx.push_back(d);
      }
    out = nx;
  }
  return out;
}

}  // namespace

TEST_CASE("coproduct action on small examples") {
  auto D = CartanDatum::preset("sl2");
  TensorSpace V1(D, parse_lambda(D, "1"));
  CHECK(V1.apply_F(0, V1.highest()) == pure_vec({{0}}));
  CHECK(V1.apply_E(0, V1.highest()).is_zero());
  CHECK(V1.apply_E(0, pure_vec({{0}})) == V1.highest());
  TensorSpace V2(D, parse_lambda(D, "2"));
  CHECK(V2.apply_E(0, pure_vec({{0}})) == pure_vec({{}}, LaurentPoly::parse("q^-1 + q")));

  TensorSpace V(D, parse_lambda(D, "1;1"));
  TensorVector want = pure_vec({{0}, {}}, LaurentPoly::q(-1));
  want.add({{}, {0}}, 1);
  CHECK(V.apply_F(0, V.highest()) == want);
  CHECK(V.vkappa(Idem{{0}, {0, 0}}) == want);
  CHECK(V.vkappa(Idem{{0}, {0, 1}}) == pure_vec({{0}, {}}));
  CHECK(V.vkappa(Idem{{}, {0, 0}}) == V.highest());
  CHECK(V.vkappa(Idem{{0}, {1, 1}}).is_zero());
  CHECK(V.pure(Idem{{0}, {0, 0}}) == pure_vec({{}, {0}}));
  CHECK(V.pure(Idem{{0}, {0, 1}}) == pure_vec({{0}, {}}));
  CHECK_THROWS(V.vkappa(Idem{{0}, {1, 0}}));
  CHECK_THROWS(V.vkappa(Idem{{0}, {0, 2}}));

  // standard classes: v_h x Fv_h for the coproduct F x K + 1 x F, i.e.
  // v^{(0,0)} - q v^{(0,1)} here
  TensorVector s = V.vkappa(Idem{{0}, {0, 0}});
  TensorVector t = V.vkappa(Idem{{0}, {0, 1}});
  t *= LaurentPoly::q(1);
  s -= t;
  CHECK(V.skappa(Idem{{0}, {0, 0}}) == s);
  CHECK(V.skappa(Idem{{0}, {0, 1}}) == pure_vec({{0}, {}}));
}

TEST_CASE("form base values") {
  auto D = CartanDatum::preset("sl2");
  TensorSpace V(D, parse_lambda(D, "1;1;1"));
  CHECK(V.form(V.highest(), V.highest()) == LaurentPoly(1));
  TensorSpace V1(D, parse_lambda(D, "1"));
  CHECK(V1.form(pure_vec({{0}}), pure_vec({{0}})) == LaurentPoly(1));
  CHECK(V1.form(pure_vec({{0}}), V1.highest()).is_zero());
  // lambda = 3 by hand: <Fv,Fv> = q^2 [3], E F^2 v = ([3] + [1]) F v, and the
  // move costs q^0 at weight -1
  TensorSpace V3(D, parse_lambda(D, "3"));
  CHECK(V3.form(pure_vec({{0}}), pure_vec({{0}})) == qint(3).shifted(2));
  CHECK(V3.form(pure_vec({{0, 0}}), pure_vec({{0, 0}})) == qint(3).shifted(2) * qint(2) * qint(2));
}

TEST_CASE("form is symmetric on v vectors and sesquilinear") {
  std::mt19937 rng(5);
  for (const auto& cs : kCases) {
    auto D = CartanDatum::preset(cs.preset);
    TensorSpace V(D, parse_lambda(D, cs.lambda));
    for (const auto& c : contents_up_to(D.rank(), cs.max_strands)) {
      auto vs = spanning(V, c);
      for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = 0; b < vs.size(); ++b) CHECK(V.form(vs[a], vs[b]) == V.form(vs[b], vs[a]));
      if (vs.size() < 2) continue;
      TensorVector x = vs[0], y = vs[1];
      x *= LaurentPoly::q(2);
      y *= LaurentPoly::parse("q^-1 + 3");
      CHECK(V.form(x, y) == V.form(vs[0], vs[1]) * LaurentPoly::q(-2) * LaurentPoly::parse("q^-1 + 3"));
    }
  }
}

TEST_CASE("adjunction on both arguments") {
  for (const auto& cs : kCases) {
    auto D = CartanDatum::preset(cs.preset);
    TensorSpace V(D, parse_lambda(D, cs.lambda));
    for (const auto& c : contents_up_to(D.rank(), cs.max_strands - 1)) {
      auto xs = spanning(V, c);
      for (int i = 0; i < D.rank(); ++i) {
        RootVector c2 = c;
        c2.coords[i] += 1;
        auto ys = spanning(V, c2);
        for (const auto& x : xs)
          for (const auto& y : ys) {
            // wt(y) = wt(F x)
            Weight wy = V.weight_for_content(c2);
            int s = D.d(i) * (wy.coords[i] + 1);
            CHECK(V.form(V.apply_F(i, x), y) == V.form(x, V.apply_E(i, y)).shifted(s));
            Weight wx = V.weight_for_content(c2);
            int t = D.d(i) * (wx.coords[i] + 1);
            CHECK(V.form(y, V.apply_F(i, x)) == V.form(V.apply_E(i, y), x).shifted(t));
          }
      }
    }
  }
}

TEST_CASE("commutator acts by the quantum integer of the weight") {
  for (const auto& cs : kCases) {
    auto D = CartanDatum::preset(cs.preset);
    TensorSpace V(D, parse_lambda(D, cs.lambda));
    for (const auto& c : contents_up_to(D.rank(), cs.max_strands - 1)) {
      auto xs = spanning(V, c);
      Weight mu = V.weight_for_content(c);
      for (int i = 0; i < D.rank(); ++i)
        for (const auto& x : xs) {
          TensorVector ef = V.apply_E(i, V.apply_F(i, x));
          ef -= V.apply_F(i, V.apply_E(i, x));
          for (const auto& w : xs) CHECK(V.form(w, ef) == qint_signed(mu.coords[i], D.d(i)) * V.form(w, x));
        }
    }
  }
}

TEST_CASE("appending a highest weight factor is isometric") {
  auto D = CartanDatum::preset("sl3");
  TensorSpace V(D, parse_lambda(D, "1,0;0,1"));
  TensorSpace W(D, parse_lambda(D, "1,0;0,1;1,1"));
  auto extend = [](const TensorVector& v) {
    TensorVector out;
    for (const auto& [t, c] : v.terms) {
      PureTensor u = t;
      u.emplace_back();
      out.add(u, c);
    }
    return out;
  };
  for (const auto& c : contents_up_to(2, 3)) {
    auto vs = spanning(V, c);
    for (const auto& a : vs)
      for (const auto& b : vs) CHECK(V.form(a, b) == W.form(extend(a), extend(b)));
  }
}

TEST_CASE("weight space dimensions") {
  auto D = CartanDatum::preset("sl2");
  TensorSpace V(D, parse_lambda(D, "1;1"));
  CHECK(V.weight_dim(Weight{{2}}) == 1);
  CHECK(V.weight_dim(Weight{{0}}) == 2);
  CHECK(V.weight_dim(Weight{{-2}}) == 1);
  TensorSpace V21(D, parse_lambda(D, "2;1"));
  // 3 x 2 = 4 + 2
  CHECK(V21.weight_dim(Weight{{1}}) == 2);
  CHECK(V21.weight_dim(Weight{{-1}}) == 2);
  CHECK(V21.weight_dim(Weight{{-3}}) == 1);
  auto A2 = CartanDatum::preset("sl3");
  TensorSpace U(A2, parse_lambda(A2, "1,0;0,1"));
  // 3 x 3bar = 8 + 1, zero weight space of dim 3
  CHECK(U.weight_dim_content(content_of(2, {1, 1})) == 3);
  int total = 0;
  for (const auto& c : contents_up_to(2, 4)) total += U.weight_dim_content(c);
  CHECK(total == 9);
}

TEST_CASE("form table is swap symmetric and exports csv") {
  auto D = CartanDatum::preset("sl2");
  TensorSpace V(D, parse_lambda(D, "1;1"));
  auto t = V.form_table(RootVector{{1}});
  CHECK(t.entries.size() == 4);
  CHECK(t.swap_symmetric());
  CHECK(t.to_csv(D).rfind("row_idem,col_idem,laurent\n", 0) == 0);
}
