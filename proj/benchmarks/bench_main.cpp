#include <benchmark/benchmark.h>

#include <random>

#include "outerpath/constructions.hpp"
#include "outerpath/path_counting.hpp"
#include "outerpath/search.hpp"

using namespace outerpath;

static void BM_CountInducedPaths(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = build({ConstructionKind::g_t_prime, 40, k - 1}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(count_induced_paths(g, k + 1).copies);
}
BENCHMARK(BM_CountInducedPaths)->DenseRange(3, 6);

static void BM_ClosedFormP3(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Graph g = random_outerplanar(static_cast<int>(state.range(0)), rng, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(count_induced_p3_closed_form(g));
}
BENCHMARK(BM_ClosedFormP3)->Arg(16)->Arg(64);

static void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const Graph g = random_outerplanar(static_cast<int>(state.range(0)), rng, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 9);

static void BM_ExtremalSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extremal_value(n, 3, {1, true}).max_copies);
}
BENCHMARK(BM_ExtremalSearch)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
