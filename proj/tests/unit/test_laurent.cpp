#include <doctest.h>

#include "tpa/laurent.hpp"

using namespace tpa;

TEST_CASE("laurent arithmetic and printing") {
  LaurentPoly a = LaurentPoly::parse("q^-2 + 3 + 2*q^2");
  CHECK(a.to_string() == "q^-2 + 3 + 2*q^2");
  CHECK(a.eval_at_1() == 6);
  CHECK(bar(a).to_string() == "2*q^-2 + 3 + q^2");
  LaurentPoly b = LaurentPoly::parse("q - q^-1");
  LaurentPoly p = a * b;
  CHECK(p.exact_div(b) == a);
  CHECK_THROWS_AS(a.exact_div(LaurentPoly::parse("q + 2")), std::domain_error);
  CHECK(LaurentPoly::parse("-q").coeff(1) == -1);
  CHECK(LaurentPoly::parse("3q^2").coeff(2) == 3);
}

TEST_CASE("quantum integers") {
  // [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 5; ++n) {
      LaurentPoly num = LaurentPoly::monomial(d * n, 1) - LaurentPoly::monomial(-d * n, 1);
      LaurentPoly den = LaurentPoly::monomial(d, 1) - LaurentPoly::monomial(-d, 1);
      CHECK(qint(n, d) == num.exact_div(den));
      CHECK(qint(n, d).is_bar_invariant());
      CHECK(qint(n, d).eval_at_1() == n);
      CHECK(qint_signed(-n, d) == -qint(n, d));
    }
  CHECK_THROWS(qint(-1, 1));
  CHECK_THROWS(qint(2, 0));
}
