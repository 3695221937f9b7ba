#include "heis/diagram.hpp"
#include "heis/heisenberg.hpp"
#include "heis/k0_harness.hpp"
#include "heis/partitions_fock.hpp"
#include "random_gen.hpp"

#include <benchmark/benchmark.h>

using namespace heis;

static void BM_NormalOrderWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NCPoly x(LaurentPoly(1L));
  for (int i = 0; i < n; ++i) x *= NCPoly::gen(Kind::Q, 2) * NCPoly::gen(Kind::P, 2);
  for (auto _ : state) benchmark::DoNotOptimize(normal_order(x, true));
}
BENCHMARK(BM_NormalOrderWord)->DenseRange(1, 4);

static void BM_ACommutator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const NCPoly a = a_as_pq(n), b = a_as_pq(-n);
  for (auto _ : state) benchmark::DoNotOptimize(commutator(a, b, true));
}
BENCHMARK(BM_ACommutator)->DenseRange(2, 5);

static void BM_FockQP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const NCPoly qp = NCPoly::gen(Kind::Q, 2) * NCPoly::gen(Kind::P, 2);
  std::vector<FockElem> basis;
  for (const auto& lam : partitions_of(n)) basis.emplace_back(lam);
  for (auto _ : state)
    for (const auto& v : basis) benchmark::DoNotOptimize(apply_ncpoly(qp, v));
}
BENCHMARK(BM_FockQP)->DenseRange(4, 10, 2);

static void BM_NormalizeDiagram(benchmark::State& state) {
  heis::testing::Rng rng(42);
  std::vector<DiagLin> xs;
  for (int i = 0; i < 50; ++i)
    xs.emplace_back(heis::testing::random_diagram(rng, parse_sig("U,D"), static_cast<int>(state.range(0)), 5,
                                                  Calculus::DH));
  for (auto _ : state)
    for (const auto& x : xs) benchmark::DoNotOptimize(normalize(x, Calculus::DH));
}
BENCHMARK(BM_NormalizeDiagram)->Arg(4)->Arg(8)->Arg(12);

static void BM_FaithfulnessRank(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(faithfulness_rank(d, 3 * d));
}
BENCHMARK(BM_FaithfulnessRank)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
