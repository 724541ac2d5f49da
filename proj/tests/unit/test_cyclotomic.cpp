#include <doctest.h>

#include "tpa/cyclotomic.hpp"

using namespace tpa;

namespace {

struct Setup {
  CartanDatum D;
  std::vector<Weight> lam;
  TildeAlgebra A;
  TensorSpace V;
  Setup(const char* preset, const char* lambda)
      : D(CartanDatum::preset(preset)),
        lam(parse_lambda(D, lambda)),
        A(D, QMatrix::default_for(D), lam),
        V(D, lam) {}
};

template <class F>
Int block_total(QuotientEngine<F>& Q, const TensorSpace& V, const RootVector& c, int ell) {
  Int total = 0;
  auto idems = idempotents_with_content(c, ell, true);
  for (const auto& a : idems)
    for (const auto& b : idems) total += graded_hom(Q, V, a, b, ScanOptions{}).dims.eval_at_1();
  return total;
}

}  // namespace

TEST_CASE("sl2 (1,1) block totals are 1, 5, 9") {
  Setup s("sl2", "1;1");
  QuotientEngine<QField> Q(s.A, QField());
  CHECK(block_total(Q, s.V, RootVector{{0}}, 2) == 1);
  CHECK(block_total(Q, s.V, RootVector{{1}}, 2) == 5);
  CHECK(block_total(Q, s.V, RootVector{{2}}, 2) == 9);
  CHECK(block_total(Q, s.V, RootVector{{3}}, 2) == 0);
  // same over a prime field
  Setup t("sl2", "1;1");
  QuotientEngine<PField> P(t.A, PField(FieldSpec::parse("p:101").p));
  CHECK(block_total(P, t.V, RootVector{{2}}, 2) == 9);
}

TEST_CASE("violating idempotents give zero components") {
  Setup s("sl2", "1;1");
  QuotientEngine<QField> Q(s.A, QField());
  Idem bad{{0}, {1, 1}}, good{{0}, {0, 1}};
  auto g = Q.graded_dim(bad, good, Quotient::Violating, 0, ScanOptions{});
  CHECK(g.dims.is_zero());
  CHECK(Q.component(bad, bad, 0, Quotient::Violating)->dim() == 0);
}

TEST_CASE("graded homs match the form on small cases") {
  for (auto [p, l, n] : {std::tuple{"sl2", "1;1", 3}, std::tuple{"sl2", "2", 3}, std::tuple{"sl3", "1,0;0,1", 2},
                         std::tuple{"B2", "0,1", 2}}) {
    Setup s(p, l);
    QuotientEngine<QField> Q(s.A, QField());
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i <= k; ++i) {
        RootVector c{std::vector<int>(s.D.rank(), 0)};
        c.coords[0] = i;
        if (s.D.rank() > 1) c.coords[1] = k - i;
        else if (i != k) continue;
        auto idems = idempotents_with_content(c, s.V.ell(), true);
        for (const auto& a : idems)
          for (const auto& b : idems) {
            auto g = graded_hom(Q, s.V, a, b, ScanOptions{});
            CHECK(g.complete);
            CHECK(g.dims == hom_prediction(s.V, a, b));
          }
      }
  }
}

TEST_CASE("a wrong upper bound is caught") {
  Setup s("sl2", "1;1");
  QuotientEngine<QField> Q(s.A, QField());
  Idem e{{0}, {0, 0}};
  CHECK_THROWS_AS(Q.graded_dim(e, e, Quotient::Violating, 1, ScanOptions{}), IntegrityError);
}

TEST_CASE("standard modules and filtrations on sl2 (1,1)") {
  Setup s("sl2", "1;1");
  QuotientEngine<QField> Q(s.A, QField());
  Idem low{{0}, {0, 0}}, high{{0}, {0, 1}};
  // black right of both reds: two-term filtration
  CHECK(filtration_terms(s.A, low).size() == 2);
  CHECK(filtration_terms(s.A, high).size() == 1);
  CHECK(filtration_terms(s.A, Idem{{}, {0, 0}}).size() == 1);
  for (const auto& e : {low, high, Idem{{}, {0, 0}}}) {
    auto cert = standard_filtration_check(Q, s.V, e, ScanOptions{});
    CHECK(cert.tensor_plus);
    CHECK(cert.dims_plus);
  }
  // nothing higher than the top idempotent, so S = P there
  CHECK(standard_hom(Q, s.V, high, high, ScanOptions{}).dims == graded_hom(Q, s.V, high, high, ScanOptions{}).dims);
  CHECK(standard_hom(Q, s.V, low, low, ScanOptions{}).dims == LaurentPoly(1));
  for (int n = 1; n <= 3; ++n) {
    auto idems = idempotents_with_content(RootVector{{n}}, 2, true);
    for (const auto& J : idems)
      for (const auto& I : idems) {
        CHECK(standard_hom(Q, s.V, J, I, ScanOptions{}).dims == standard_prediction(s.V, J, I));
        for (int d = -4; d <= 6; ++d) CHECK(Q.right_closed(I, J, d, Quotient::Standard));
      }
  }
}

TEST_CASE("violating kernel is a right ideal") {
  Setup s("sl3", "1,0;0,1");
  QuotientEngine<QField> Q(s.A, QField());
  auto idems = idempotents_with_content(RootVector{{1, 1}}, 2, true);
  for (const auto& a : idems)
    for (const auto& b : idems)
      for (int d = -2; d <= 6; ++d) CHECK(Q.right_closed(a, b, d, Quotient::Violating));
}

TEST_CASE("single red strand: kernel equals the cyclotomic ideal") {
  for (const char* l : {"1", "2", "3"}) {
    Setup s("sl2", l);
    QuotientEngine<QField> Q(s.A, QField());
    for (int n = 0; n <= 3; ++n) {
      std::vector<int> I(n, 0);
      for (int d = -6; d <= 10; ++d) CHECK(cyclotomic_kernel_matches(Q, I, I, d));
    }
  }
  Setup s("sl3", "1,0");
  QuotientEngine<QField> Q(s.A, QField());
  for (const auto& I : sequences_with_content(RootVector{{1, 1}}))
    for (const auto& J : sequences_with_content(RootVector{{1, 1}}))
      for (int d = -4; d <= 6; ++d) CHECK(cyclotomic_kernel_matches(Q, I, J, d));
}

TEST_CASE("block assembly") {
  Setup s("sl2", "1;1");
  QuotientEngine<QField> Q(s.A, QField());
  auto B = build_block(Q, s.V, RootVector{{2}}, ScanOptions{}, true);
  CHECK(B.dim() == 9);
  CHECK(block_associativity_failures(B) == 0);
  // the unit is the sum of the idempotents and acts as one
  for (int i = 0; i < B.dim(); ++i) {
    QuotientBlock<QField>::Vec ei{{i, B.field.one()}};
    CHECK(B.multiply(B.unit(), ei) == ei);
    CHECK(B.multiply(ei, B.unit()) == ei);
  }
  auto top = build_block(Q, s.V, RootVector{{0}}, ScanOptions{});
  CHECK(top.dim() == 1);
}

TEST_CASE("double centralizer elements") {
  Setup m("sl2", "1;1");
  Setup one("sl2", "2");
  QuotientEngine<QField> Qm(m.A, QField()), Qs(one.A, QField());
  // kappa = 0: y = e_I, so both sides agree with no shift
  auto c0 = double_centralizer_data(Qm, Qs, m.V, one.V, Idem{{0}, {0, 0}}, {0}, ScanOptions{});
  CHECK(c0.match);
  CHECK(c0.shift == 0);
  auto c1 = double_centralizer_data(Qm, Qs, m.V, one.V, Idem{{0}, {0, 1}}, {0}, ScanOptions{});
  CHECK(c1.match);
  for (int n = 2; n <= 3; ++n)
    for (const auto& k : all_kappas(n, 2, true)) {
      auto c = double_centralizer_data(Qm, Qs, m.V, one.V, Idem{std::vector<int>(n, 0), k}, std::vector<int>(n, 0),
                                       ScanOptions{});
      CHECK(c.match);
    }
}

TEST_CASE("Frobenius functionals on single-red blocks") {
  for (const char* l : {"1", "2"}) {
    Setup s("sl2", l);
    QuotientEngine<QField> Q(s.A, QField());
    for (int n = 0; n <= 3; ++n) {
      auto B = build_block(Q, s.V, RootVector{{n}}, ScanOptions{});
      CHECK(frobenius_check(B, 3).feasible);
    }
  }
}
