#include "doctest.h"
#include "heis/scalars.hpp"
#include "random_gen.hpp"

using namespace heis;
using heis::testing::Rng;

TEST_CASE("laurent polynomials form a commutative ring") {
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = heis::testing::random_laurent(rng), b = heis::testing::random_laurent(rng),
                      c = heis::testing::random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1L) == a);
    CHECK((a + b).eval(1) == a.eval(1) + b.eval(1));
    CHECK((a * b).eval(-1) == a.eval(-1) * b.eval(-1));
    if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
  }
}

TEST_CASE("laurent polynomials render and parse") {
  const LaurentPoly x = LaurentPoly(1L) - LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(-1, -2);
  CHECK(LaurentPoly::parse(x.str()) == x);
  CHECK(LaurentPoly(1L).str() == "1");
  CHECK(LaurentPoly().str() == "0");
  CHECK((LaurentPoly(1L) + LaurentPoly::t()).str() == "1 + t");
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = heis::testing::random_laurent(rng);
    CHECK(LaurentPoly::parse(a.str()) == a);
  }
}

TEST_CASE("laurent evaluation and division errors") {
  CHECK_THROWS_AS(LaurentPoly::monomial(1, -1).eval(0), std::domain_error);
  CHECK_THROWS_AS((LaurentPoly(1L) + LaurentPoly::t()).exact_div(LaurentPoly(2L)), std::domain_error);
  CHECK_THROWS_AS(LaurentPoly::monomial(3, -2).eval(2), std::domain_error);
  CHECK(LaurentPoly::monomial(4, -2).eval(2) == 1);
}

TEST_CASE("quantum integers") {
  CHECK(qint(1) == LaurentPoly(1L));
  CHECK(qint(3).str() == "1 + t + t^2");
  for (int k = 1; k < 12; ++k) {
    CHECK(qint(k + 1) == LaurentPoly(1L) + LaurentPoly::t() * qint(k));
    CHECK(qint(k).eval(1) == k);
    CHECK(qint(k) * (LaurentPoly(1L) - LaurentPoly::t()) == LaurentPoly(1L) - LaurentPoly::monomial(1, k));
  }
}

TEST_CASE("exterior scalars") {
  const ExtScalar v{0, 1}, one{1, 0}, x{2, Rational(1, 3)};
  CHECK(ext_mul(v, v) == ExtScalar{0, 0});
  CHECK(ext_mul(one, x) == x);
  CHECK(ext_mul(x, x) == ExtScalar{4, Rational(4, 3)});
  CHECK(ext_trace(x) == Rational(1, 3));
  CHECK(ext_trace(one) == 0);
}
