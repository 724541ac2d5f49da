#include <doctest.h>

#include <random>

#include "tpa/cartan.hpp"

using namespace tpa;

namespace {

// Q_ij(u,v) = Q_ji(v,u) and every monomial has weight -2 d_j c_ij when
// deg u = 2 d_i, deg v = 2 d_j.
void check_q_invariants(const CartanDatum& D, const QMatrix& Q) {
  for (int i = 0; i < D.rank(); ++i)
    for (int j = 0; j < D.rank(); ++j) {
      if (i == j) {
        CHECK(Q.entry(i, j).empty());
        continue;
      }
      const BiPoly& a = Q.entry(i, j);
      const BiPoly& b = Q.entry(j, i);
      CHECK(a.size() == b.size());
      for (const auto& [e, c] : a) {
        auto it = b.find({e.second, e.first});
        REQUIRE(it != b.end());
        CHECK(it->second == c);
        CHECK(2 * D.d(i) * e.first + 2 * D.d(j) * e.second == -2 * D.d(j) * D.c(i, j));
      }
      CHECK(Q.t(i, j) != 0);
    }
}

}  // namespace

TEST_CASE("pairings on small types") {
  auto sl2 = CartanDatum::preset("sl2");
  RootVector a{{1}};
  CHECK(sl2.pairing(a, a) == 2);
  CHECK(sl2.pairing(a, sl2.fundamental(0)) == 1);
  auto a2 = CartanDatum::preset("sl3");
  CHECK(a2.pairing(RootVector{{1, 0}}, RootVector{{0, 1}}) == -1);
  auto b2 = CartanDatum::preset("B2");
  CHECK(b2.pairing(RootVector{{1, 0}}, RootVector{{1, 0}}) == 4);
  CHECK(b2.pairing(RootVector{{0, 1}}, RootVector{{0, 1}}) == 2);
  CHECK(b2.pairing(RootVector{{1, 0}}, RootVector{{0, 1}}) == -2);
  CHECK_THROWS_AS(sl2.pairing(a, RootVector{{1, 0}}), DatumMismatch);
}

TEST_CASE("pairing is symmetric and matches d_i lambda^i") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(-4, 4);
  for (const char* name : {"sl2", "sl3", "A3", "A1xA1", "B2"}) {
    auto D = CartanDatum::preset(name);
    for (int trial = 0; trial < 50; ++trial) {
      RootVector x{std::vector<int>(D.rank())}, y{std::vector<int>(D.rank())};
      Weight w{std::vector<int>(D.rank())};
      for (int i = 0; i < D.rank(); ++i) {
        x.coords[i] = pick(rng);
        y.coords[i] = pick(rng);
        w.coords[i] = pick(rng);
      }
      CHECK(D.pairing(x, y) == D.pairing(y, x));
      for (int i = 0; i < D.rank(); ++i) {
        RootVector ai{std::vector<int>(D.rank(), 0)};
        ai.coords[i] = 1;
        CHECK(D.pairing(ai, w) == D.d(i) * w.coords[i]);
      }
      // the root-lattice element and its coroot pairings give the same pairing
      CHECK(D.pairing(x, D.root_to_weight(y)) == D.pairing(x, y));
    }
  }
}

TEST_CASE("default Q") {
  auto a2 = CartanDatum::preset("sl3");
  auto Q = QMatrix::default_for(a2);
  BiPoly uv{{{1, 0}, 1}, {{0, 1}, 1}};
  CHECK(Q.entry(0, 1) == uv);
  CHECK(Q.entry(0, 0).empty());
  auto a11 = CartanDatum::preset("A1xA1");
  BiPoly two{{{0, 0}, 2}};
  CHECK(QMatrix::default_for(a11).entry(0, 1) == two);
  for (const char* name : {"sl2", "sl3", "A4", "A1xA1", "B2"}) {
    auto D = CartanDatum::preset(name);
    check_q_invariants(D, QMatrix::default_for(D));
  }
}

TEST_CASE("datum validation") {
  CHECK_THROWS_AS(CartanDatum({"1", "2"}, {{2, -1}, {0, 2}}, {1, 1}), ConfigError);
  CHECK_THROWS_AS(CartanDatum({"1"}, {{3}}, {1}), ConfigError);
  CHECK_THROWS_AS(CartanDatum({"1", "2"}, {{2, -2}, {-1, 2}}, {1, 1}), ConfigError);
  CHECK_THROWS_AS(CartanDatum::preset("E9x"), ConfigError);
}

TEST_CASE("datum json round trip and bad Q") {
  auto b2 = CartanDatum::preset("B2");
  auto Q = QMatrix::default_for(b2);
  auto loaded = load_datum_json(datum_to_json(b2, Q));
  CHECK(loaded.datum == b2);
  CHECK(loaded.Q.entry(0, 1) == Q.entry(0, 1));
  check_q_invariants(loaded.datum, loaded.Q);
  // not symmetric under u <-> v
  CHECK_THROWS_AS(load_datum_json(R"({"nodes":["1","2"],"cartan":[[2,-1],[-1,2]],"d":[1,1],
      "Q":{"1,2":[[1,1,0],[1,0,1]],"2,1":[[1,1,0],[2,0,1]]}})"),
                  ConfigError);
  // t_ij = 0
  CHECK_THROWS_AS(load_datum_json(R"({"nodes":["1","2"],"cartan":[[2,-1],[-1,2]],"d":[1,1],
      "Q":{"1,2":[[1,0,1]],"2,1":[[1,1,0]]}})"),
                  ConfigError);
}

TEST_CASE("lambda parsing") {
  auto a2 = CartanDatum::preset("sl3");
  auto l = parse_lambda(a2, "1,0;0,1");
  REQUIRE(l.size() == 2);
  CHECK(l[1].coords == std::vector<int>{0, 1});
  CHECK_THROWS(parse_lambda(a2, "1"));
  CHECK_THROWS(parse_lambda(a2, "-1,0"));
}
