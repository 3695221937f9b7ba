#include "doctest.h"
#include "heis/heisenberg.hpp"
#include "heis/report.hpp"
#include "random_gen.hpp"

#include <algorithm>
#include <functional>
#include <map>

using namespace heis;
using heis::testing::Rng;

namespace {

// Commutative polynomials in one family of letters, truncated by total index.
using Mono = std::vector<int>;  // weakly decreasing indices
using CPoly = std::map<Mono, Rational>;

CPoly cmul(const CPoly& a, const CPoly& b, int max_deg) {
  CPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      int deg = 0;
      for (int i : m) deg += i;
      if (deg > max_deg) continue;
      std::sort(m.begin(), m.end(), std::greater<>());
      r[m] += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

CPoly homogeneous(const CPoly& a, int deg) {
  CPoly r;
  for (const auto& [m, c] : a) {
    int d = 0;
    for (int i : m) d += i;
    if (d == deg) r[m] = c;
  }
  return r;
}

// Sum over k of X^k * coeff(k), where X has no constant term.
CPoly series(const CPoly& x, int max_deg, const std::function<Rational(int)>& coeff) {
  CPoly result{{{}, coeff(0)}}, power{{{}, 1}};
  for (int k = 1; k <= max_deg; ++k) {
    power = cmul(power, x, max_deg);
    for (const auto& [m, c] : power) result[m] += coeff(k) * c;
  }
  std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
  return result;
}

CPoly from_ncpoly(const NCPoly& x, Kind kind) {
  CPoly r;
  for (const auto& [w, c] : x.terms()) {
    REQUIRE(c.is_constant());
    Mono m;
    for (const auto& l : w) {
      REQUIRE(l.kind == kind);
      m.push_back(l.index);
    }
    std::sort(m.begin(), m.end(), std::greater<>());
    r[m] += Rational(c.coeff(0));
  }
  return r;
}

}  // namespace

TEST_CASE("normal ordering examples") {
  const NCPoly q2p3 = NCPoly::gen(Kind::Q, 2) * NCPoly::gen(Kind::P, 3);
  CHECK(normal_order(q2p3, true).str() == "p3*q2 + (1 + t)*p2*q1 + (1 + t + t^2)*p1");
  CHECK(normal_order(q2p3, false).str() == "p3*q2 + p2*q1 + p1");
  const NCPoly q1p1 = NCPoly::gen(Kind::Q, 1) * NCPoly::gen(Kind::P, 1);
  CHECK(normal_order(q1p1, true).str() == "p1*q1 + 1 + t");
  CHECK(normal_order(q1p1, false).str() == "p1*q1 + 1");
  CHECK(NCPoly::gen(Kind::P, 0) == NCPoly(LaurentPoly(1L)));
  CHECK(NCPoly::gen(Kind::Q, -1).is_zero());
  CHECK(normal_order(NCPoly::gen(Kind::P, 1) * NCPoly::gen(Kind::P, 2), true).str() == "p2*p1");
}

TEST_CASE("negative coefficients render with a minus") {
  NCPoly x = NCPoly::gen(Kind::Q, 1).scaled(LaurentPoly::monomial(-2, 1));
  x += NCPoly::gen(Kind::P, 2).scaled(LaurentPoly(1L) - LaurentPoly::t());
  x += NCPoly::gen(Kind::P, 1).scaled(LaurentPoly::monomial(1, -1));
  x += NCPoly(LaurentPoly::monomial(-1, 2));
  CHECK(x.str() == "-2*t*q1 + (1 - t)*p2 + t^-1*p1 - t^2");
}

TEST_CASE("normal ordering is confluent, idempotent and linear") {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const NCPoly x = heis::testing::random_ncpoly(rng, 3, 5, 4);
    const NCPoly y = heis::testing::random_ncpoly(rng, 3, 5, 4);
    const LaurentPoly c = heis::testing::random_laurent(rng);
    for (bool deformed : {true, false}) {
      const NCPoly n = normal_order(x, deformed);
      CHECK(n.is_normal());
      CHECK(n == normal_order(x, deformed, RedexOrder::Rightmost));
      CHECK(normal_order(n, deformed) == n);
      CHECK(normal_order(x + y.scaled(c), deformed) == n + normal_order(y, deformed).scaled(c));
    }
  }
}

TEST_CASE("normal ordering is associative") {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const NCPoly x = heis::testing::random_ncpoly(rng, 2, 3, 3), y = heis::testing::random_ncpoly(rng, 2, 3, 3),
                 z = heis::testing::random_ncpoly(rng, 2, 3, 3);
    const NCPoly xy = normal_order(x * y, true), yz = normal_order(y * z, true);
    CHECK(normal_order(xy * z, true) == normal_order(x * yz, true));
  }
}

TEST_CASE("specializing t to zero commutes with normal ordering") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const NCPoly w = NCPoly::word(heis::testing::random_word(rng, 6, 4));
    CHECK(specialize_t(normal_order(w, true), 0) == normal_order(w, false));
  }
}

TEST_CASE("a_n agrees with the logarithm of the q generating series") {
  const int N = 7;
  for (Kind kind : {Kind::Q, Kind::P}) {
    CPoly x;
    for (int k = 1; k <= N; ++k) x[{k}] = 1;
    const CPoly log =
        series(x, N, [](int k) { return k == 0 ? Rational(0) : Rational(k % 2 ? 1 : -1, k); });
    for (int n = 1; n <= N; ++n) {
      CPoly expect;
      for (const auto& [m, c] : homogeneous(log, n)) expect[m] = c * n;
      const NCPoly a = a_as_pq(kind == Kind::Q ? n : -n);
      CHECK(a.is_normal());
      CHECK(from_ncpoly(a, kind) == expect);
    }
  }
  CHECK(a_as_pq(2).str() == "2*q2 - q1*q1");
  CHECK_THROWS_AS(a_as_pq(0), std::invalid_argument);
}

TEST_CASE("tilde p agrees with the inverse of the alternating p series") {
  const int N = 7;
  CPoly x;  // 1 + X with X = sum (-1)^m p_m
  for (int m = 1; m <= N; ++m) x[{m}] = m % 2 ? -1 : 1;
  const CPoly inv = series(x, N, [](int k) { return Rational(k % 2 ? -1 : 1); });
  for (int m = 0; m <= N; ++m) CHECK(from_ncpoly(tilde_p_as_p(m), Kind::P) == homogeneous(inv, m));
  CHECK_THROWS_AS(tilde_p_as_p(-1), std::invalid_argument);
}

TEST_CASE("a_n commutators and tilde relations") {
  for (int n = -4; n <= 4; ++n)
    for (int m = -4; m <= 4; ++m)
      if (n != 0 && m != 0) CHECK_MESSAGE(verify_a_commutator(n, m).pass, n << "," << m);
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) CHECK(verify_tilde_relation(n, m).pass);
  const NCPoly a1 = a_as_pq(1), am1 = a_as_pq(-1);
  CHECK(commutator(a1, am1, true).str() == "1 + t");
  CHECK(commutator(a1, am1, false).str() == "1");
}
