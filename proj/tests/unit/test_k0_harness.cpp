#include "doctest.h"
#include "heis/heisenberg.hpp"
#include "heis/k0_harness.hpp"
#include "heis/partitions_fock.hpp"
#include "heis/report.hpp"

#include <map>

using namespace heis;

namespace {

// Pieri rule by brute force: all mu of size |lam| + k containing lam with at most one box per column.
std::map<Partition, Integer> add_horizontal(const std::map<Partition, Integer>& x, int k) {
  std::map<Partition, Integer> out;
  for (const auto& [lam, c] : x)
    for (const auto& mu : partitions_of(lam.size() + k)) {
      if (!mu.contains(lam)) continue;
      bool ok = true;
      for (int i = 0; i + 1 < mu.length() + 1 && ok; ++i) ok = mu.part(i + 1) <= lam.part(i);
      if (ok) out[mu] += c;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("jacobi-trudi determinants produce single Schur classes under Pieri") {
  CHECK(jacobi_trudi(Partition({2, 1})).str() == "-p3 + p2*p1");
  CHECK(jacobi_trudi(Partition({3})).str() == "p3");
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      std::map<Partition, Integer> total;
      const NCPoly jt = jacobi_trudi(lam);
      for (const auto& [w, c] : jt.terms()) {
        REQUIRE(c.is_constant());
        std::map<Partition, Integer> v{{Partition(), c.coeff(0)}};
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          REQUIRE(it->kind == Kind::P);
          v = add_horizontal(v, it->index);
        }
        for (const auto& [mu, k] : v) total[mu] += k;
      }
      std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
      CHECK(total == std::map<Partition, Integer>{{lam, 1}});
    }
  CHECK(verify_gamma_generation(5).pass);
}

TEST_CASE("raising headroom") {
  CHECK(raising_headroom(NCPoly(LaurentPoly(1L))) == 0);
  CHECK(raising_headroom(NCPoly::gen(Kind::P, 2)) == 2);
  CHECK(raising_headroom(NCPoly::gen(Kind::Q, 2)) == 0);
  CHECK(raising_headroom(NCPoly::gen(Kind::Q, 1) * NCPoly::gen(Kind::P, 3)) == 3);
  CHECK(raising_headroom(NCPoly::gen(Kind::P, 3) * NCPoly::gen(Kind::Q, 1)) == 2);
}

TEST_CASE("relation operators") {
  for (auto v : {RelationVariant::Deformed, RelationVariant::ClassicalH, RelationVariant::ClassicalE})
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= 3; ++m) CHECK_MESSAGE(verify_relation_operators(n, m, v, 6).pass, variant_name(v));
  CHECK(std::string(variant_name(RelationVariant::Deformed)) == "deformed");
  CHECK(std::string(variant_name(RelationVariant::ClassicalE)) == "classical-e");
  CHECK(verify_relation_operators(2, 1, RelationVariant::Deformed, 5).id == "relation(2,1,deformed)");
  const auto fock = verify_fock_relations(5);
  CHECK(fock.size() == 5);
  CHECK(all_pass(fock));
}

TEST_CASE("faithfulness") {
  std::vector<int> pcount{1, 1, 2, 3, 5};
  for (int d = 0; d <= 4; ++d) {
    size_t expect = 0;
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b) expect += pcount[a] * pcount[b];
    const auto mons = normal_monomials(d);
    CHECK(mons.size() == expect);
    for (const auto& w : mons) CHECK(is_normal_word(w));
  }
  const RankReport r = faithfulness_rank(2, 6);
  CHECK(r.monomials == 8);
  CHECK(r.full());
}
