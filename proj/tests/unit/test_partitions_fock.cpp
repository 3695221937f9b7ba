#include "doctest.h"
#include "heis/heisenberg.hpp"
#include "heis/k0_harness.hpp"
#include "heis/partitions_fock.hpp"
#include "heis/report.hpp"
#include "random_gen.hpp"

#include <algorithm>
#include <set>

using namespace heis;
using heis::testing::Rng;

namespace {

// Every sequence with entries in [0, n] of length n, filtered to partitions of n.
std::set<Partition> brute_partitions(int n) {
  std::set<Partition> out;
  std::vector<int> v(n, 0);
  for (;;) {
    int sum = 0;
    for (int x : v) sum += x;
    if (sum == n && std::is_sorted(v.rbegin(), v.rend())) {
      std::vector<int> parts;
      for (int x : v)
        if (x > 0) parts.push_back(x);
      out.insert(Partition(parts));
    }
    int i = 0;
    while (i < n && v[i] == n) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  if (n == 0) out.insert(Partition());
  return out;
}

bool is_strip(const Partition& lam, const Partition& mu, Strip kind) {
  if (!mu.contains(lam)) return false;
  const Partition a = kind == Strip::Horizontal ? lam.transpose() : lam;
  const Partition b = kind == Strip::Horizontal ? mu.transpose() : mu;
  for (int i = 0; i < b.length(); ++i)
    if (b.part(i) - a.part(i) > 1) return false;
  return true;
}

std::set<Partition> brute_strips(const Partition& lam, int k, Strip kind) {
  std::set<Partition> out;
  for (const auto& mu : partitions_of(lam.size() + k))
    if (is_strip(lam, mu, kind)) out.insert(mu);
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  const Partition p({3, 1, 1});
  CHECK(p.size() == 5);
  CHECK(p.transpose() == Partition({3, 1, 1}));
  CHECK(Partition({4, 2}).transpose() == Partition({2, 2, 1, 1}));
  CHECK(p.str() == "[3,1,1]");
  CHECK(Partition().str() == "[]");
  CHECK(Partition::parse("[3,1,1]") == p);
  CHECK(Partition::parse("[]") == Partition());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition({3, 1}).dominates(Partition({2, 2})));
  CHECK_FALSE(Partition({2, 2}).dominates(Partition({3, 1})));
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK_FALSE(Partition({3, 1}).contains(Partition({2, 2})));
}

TEST_CASE("partition enumeration matches brute force") {
  const std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto ps = partitions_of(n);
    CHECK(ps.size() == static_cast<size_t>(counts[n]));
    if (n <= 7) CHECK(std::set<Partition>(ps.begin(), ps.end()) == brute_partitions(n));
    for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
  }
  const auto ps = partitions_of(4);
  CHECK(ps.front() == Partition({4}));
  CHECK(ps.back() == Partition({1, 1, 1, 1}));
  const auto up = partitions_up_to(3);
  CHECK(up.size() == 7);
  CHECK(up.front() == Partition());
  CHECK(up[1] == Partition({1}));
}

TEST_CASE("transpose is an involution that reverses dominance") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& a : partitions_of(n)) {
      CHECK(a.transpose().transpose() == a);
      CHECK(a.transpose().size() == n);
      for (const auto& b : partitions_of(n)) CHECK(a.dominates(b) == b.transpose().dominates(a.transpose()));
    }
}

TEST_CASE("strips match brute force") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lam : partitions_of(n))
      for (int k = 0; k <= 3; ++k)
        for (Strip kind : {Strip::Horizontal, Strip::Vertical}) {
          const auto add = strip_add(lam, k, kind);
          CHECK(std::set<Partition>(add.begin(), add.end()) == brute_strips(lam, k, kind));
          CHECK(std::set<Partition>(add.begin(), add.end()).size() == add.size());
          std::set<Partition> removed;
          if (k <= n)
            for (const auto& mu : partitions_of(n - k))
              if (is_strip(mu, lam, kind)) removed.insert(mu);
          const auto rem = strip_remove(lam, k, kind);
          CHECK(std::set<Partition>(rem.begin(), rem.end()) == removed);
        }
}

TEST_CASE("fock actions on small partitions") {
  const FockElem vac{Partition()};
  CHECK(act_p(1, vac) == FockElem(Partition({1})));
  CHECK(act_p(2, FockElem(Partition({1}))).str() == "[2,1] + [3]");
  CHECK(act_tilde_p(2, FockElem(Partition({1}))).str() == "[1,1,1] + [2,1]");
  CHECK(act_q(1, FockElem(Partition({1}))) == vac.scaled(LaurentPoly(1L) + LaurentPoly::t()));
  CHECK(act_q(1, vac).is_zero());
  const auto [q1, q2] = act_q_split(FockElem(Partition({2, 1})));
  CHECK(q2 == q1.scaled(LaurentPoly::t()));
  CHECK(q1 + q2 == act_q(1, FockElem(Partition({2, 1}))));
}

TEST_CASE("the fock representation respects normal ordering") {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const NCPoly w = NCPoly::word(heis::testing::random_word(rng, 4, 3));
    const FockElem v(heis::testing::random_partition(rng, 4));
    CHECK(apply_ncpoly(w, v) == apply_ncpoly(normal_order(w, true), v));
  }
  CHECK(all_pass(verify_fock_relations(6)));
}

TEST_CASE("operator matrices") {
  const OpMatrix p1 = op_matrix(NCPoly::gen(Kind::P, 1), 2);
  CHECK(p1.domain == std::vector<Partition>{Partition(), Partition({1})});
  CHECK(p1.at(Partition({2}), Partition({1})) == LaurentPoly(1L));
  CHECK(p1.at(Partition({1, 1}), Partition({1})) == LaurentPoly(1L));
  CHECK(p1.at(Partition({1}), Partition()) == LaurentPoly(1L));
  const OpMatrix q1 = op_matrix(NCPoly::gen(Kind::Q, 1), 1);
  CHECK(q1.at(Partition(), Partition({1})) == LaurentPoly(1L) + LaurentPoly::t());
  const OpMatrix id = op_matrix(NCPoly(LaurentPoly(1L)), 2);
  for (const auto& a : id.domain)
    for (const auto& b : id.codomain) CHECK(id.at(b, a) == LaurentPoly(a == b ? 1L : 0L));
  CHECK_THROWS_AS(op_matrix(NCPoly::gen(Kind::P, 3), 2), BoundError);
  try {
    op_matrix(NCPoly::gen(Kind::P, 3), 2);
  } catch (const BoundError& e) {
    CHECK(e.required_bound == 3);
  }
}
