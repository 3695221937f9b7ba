#include "heis/diagram.hpp"
#include "heis/heisenberg.hpp"
#include "heis/k0_harness.hpp"
#include "heis/partitions_fock.hpp"
#include "heis/symmetric_groups.hpp"
#include "random_gen.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace heis;
using heis::testing::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects reports; detail becomes the first failure or a pass summary.
struct Tally {
  int checks = 0;
  Outcome out;
  void add(const Report& r) {
    ++checks;
    if (!r.pass && out.pass) {
      out.pass = false;
      out.detail = r.id + (r.residual_terms.empty() ? "" : ": " + r.residual_terms.front());
    }
  }
  void add(const std::vector<Report>& rs) {
    for (const auto& r : rs) add(r);
  }
  void fail(const std::string& why) {
    ++checks;
    if (out.pass) out = {false, why};
  }
  Outcome done(const std::string& summary) {
    if (out.pass) out.detail = summary.empty() ? std::to_string(checks) + " checks" : summary;
    return out;
  }
};

Outcome c1_normal_order() {
  Tally t;
  const NCPoly x = NCPoly::gen(Kind::Q, 2) * NCPoly::gen(Kind::P, 3);
  const NCPoly d = normal_order(x, true);
  if (d.str() != "p3*q2 + (1 + t)*p2*q1 + (1 + t + t^2)*p1") t.fail("deformed: " + d.str());
  const NCPoly c = normal_order(x, false);
  if (c.str() != "p3*q2 + p2*q1 + p1") t.fail("classical: " + c.str());
  if (specialize_t(d, 0) != c) t.fail("t=0 specialization differs: " + specialize_t(d, 0).str());
  return t.done("q2*p3 literal, t=0 agrees");
}

Outcome c2_a_commutators() {
  Tally t;
  for (int n = -6; n <= 6; ++n)
    for (int m = -6; m <= 6; ++m)
      if (n != 0 && m != 0) t.add(verify_a_commutator(n, m));
  return t.done(std::to_string(t.checks) + " signed pairs");
}

Outcome c3_tilde() {
  Tally t;
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m) t.add(verify_tilde_relation(n, m));
  return t.done(std::to_string(t.checks) + " pairs");
}

Outcome c4_fock() {
  Tally t;
  t.add(verify_fock_relations(10));
  for (auto v : {RelationVariant::Deformed, RelationVariant::ClassicalH, RelationVariant::ClassicalE})
    for (int n = 1; n <= 4; ++n)
      for (int m = 1; m <= 4; ++m) t.add(verify_relation_operators(n, m, v, 8));
  return t.done(std::to_string(t.checks) + " operator identities");
}

Outcome c5_symmetric() {
  Tally t;
  for (int n = 1; n <= 5; ++n) t.add(verify_idempotents(n));
  for (int n = 1; n <= 6; ++n) t.add(verify_regular_dim(n));
  return t.done("idempotents n<=5, dimensions and Kostka n<=6");
}

Outcome c6_diagrams() {
  Tally t;
  const auto dh = verify_biproduct(Calculus::DH), kh = verify_biproduct(Calculus::KH);
  if (dh.size() != 10) t.fail("expected 10 DH identities, got " + std::to_string(dh.size()));
  if (kh.size() != 5) t.fail("expected 5 KH identities, got " + std::to_string(kh.size()));
  t.add(dh);
  t.add(kh);
  t.add(verify_circles());
  t.add(verify_clockwise_circle(Calculus::DH));
  t.add(verify_clockwise_circle(Calculus::KH));
  return t.done("10 DH + 5 KH biproduct identities, circles, clockwise circle");
}

Outcome c7_psi() {
  Tally t;
  t.add(verify_psi_relations());
  return t.done(std::to_string(t.checks) + " labelled relations");
}

Outcome c8_degrees() {
  Tally t;
  t.add(verify_degree_table());
  Rng rng(8);
  int rewrites = 0;
  for (int i = 0; i < 1000; ++i) {
    Signature bottom;
    for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k)
      bottom.push_back(rng() % 2 ? Orient::U : Orient::D);
    const Diagram d = heis::testing::random_diagram(rng, bottom, 8, 5, Calculus::DH);
    auto canon = canonicalize(d);
    if (!canon) continue;
    const int deg = degree(canon->second);
    for (const auto& r : rule_instances(canon->second, Calculus::DH)) {
      ++rewrites;
      const DiagLin rewritten = apply_rule(canon->second, r, Calculus::DH);
      for (const auto& [term, c] : rewritten.terms())
        if (degree(term) != deg) t.fail(std::string(rule_name(r.kind)) + " changes degree of " + canon->second.str());
    }
    const DiagLin normal = normalize(DiagLin(d), Calculus::DH);
    for (const auto& [term, c] : normal.terms())
      if (degree(term) != deg) t.fail("normalize changes degree of " + d.str());
  }
  const bool preserved = t.out.pass;
  int bad = 0;
  std::string witness;
  for (int samples = 0; samples < 500; ++samples) {
    const Diagram d = heis::testing::random_block_diagram(rng, 6, 5, Calculus::DH);
    const DiagLin normal = normalize(DiagLin(d), Calculus::DH);
    bool ok = true;
    for (const auto& [term, c] : normal.terms())
      if (sdegree(term) <= 0) {
        ok = false;
        if (witness.empty()) witness = term.str() + " has sdeg " + std::to_string(sdegree(term));
      }
    bad += !ok;
  }
  const std::string summary = "degree table and preservation " + std::string(preserved ? "ok" : "FAIL") + " (" +
                              std::to_string(rewrites) + " rewrites on 1000 diagrams); sdeg positivity ";
  if (bad > 0) {
    t.fail(summary + "fails on " + std::to_string(bad) + "/500 samples, e.g. " + witness);
  }
  return t.done(summary + "holds on 500 samples");
}

Outcome c9_gamma() {
  Tally t;
  t.add(verify_gamma_generation(6));
  return t.done("all partitions of size <= 6");
}

Outcome c10_faithfulness() {
  Tally t;
  const RankReport r = faithfulness_rank(4, 12);
  if (!r.full())
    t.fail("rank " + std::to_string(r.rank) + " of " + std::to_string(r.monomials) + " (" + r.method + ")");
  return t.done("rank " + std::to_string(r.rank) + " of " + std::to_string(r.monomials) + " (" + r.method + ")");
}

Outcome c11_properties() {
  Tally t;
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const NCPoly x = NCPoly::word(heis::testing::random_word(rng, 6, 4));
    for (bool deformed : {true, false})
      if (normal_order(x, deformed, RedexOrder::Leftmost) != normal_order(x, deformed, RedexOrder::Rightmost))
        t.fail("confluence: " + x.str());
  }
  for (int i = 0; i < 500; ++i) {
    const Calculus c = i % 2 ? Calculus::KH : Calculus::DH;
    Signature bottom;
    for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k)
      bottom.push_back(rng() % 2 ? Orient::U : Orient::D);
    const DiagLin x(heis::testing::random_diagram(rng, bottom, 7, 5, c));
    const DiagLin n = normalize(x, c);
    if (normalize(n, c) != n) t.fail("idempotence: " + x.str());
  }
  int scalars = 0;
  for (int i = 0; i < 500; ++i) {
    const Calculus c = i % 2 ? Calculus::KH : Calculus::DH;
    const DiagLin x(heis::testing::random_closed_diagram(rng, 6, 4, c));
    const DiagLin lo = normalize(x, c, Strategy::Lowest), hi = normalize(x, c, Strategy::Highest);
    if (lo != hi) {
      t.fail("strategy dependence: " + x.str());
      continue;
    }
    try {
      if (eval_closed(x, c, Strategy::Lowest) != eval_closed(x, c, Strategy::Highest))
        t.fail("eval strategy dependence: " + x.str());
      ++scalars;
    } catch (const NotScalarError&) {
      // Free clockwise bubbles; the normal forms above already agree.
    }
  }
  return t.done("1000 words, 500 idempotence, 500 closed diagrams (" + std::to_string(scalars) + " scalar)");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"normal ordering of q2*p3", c1_normal_order},
      {"a_n commutator suite", c2_a_commutators},
      {"tilde relations", c3_tilde},
      {"Fock operator identities", c4_fock},
      {"symmetric group suite", c5_symmetric},
      {"diagram suite", c6_diagrams},
      {"label translation suite", c7_psi},
      {"degree suite", c8_degrees},
      {"Schur classes from P_k", c9_gamma},
      {"faithfulness rank", c10_faithfulness},
      {"property tests", c11_properties},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %s: %s (%.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
