#include <benchmark/benchmark.h>

#include "medianforge/free_median.hpp"
#include "medianforge/median_core.hpp"
#include "medianforge/spectral.hpp"

using namespace medianforge;

static void BM_AxiomCheck(benchmark::State& state) {
  const auto m = shapes::cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_median_axioms(m.table()).passed());
  state.SetComplexityN(static_cast<benchmark::IterationCount>(m.size()));
}
BENCHMARK(BM_AxiomCheck)->DenseRange(2, 4)->Complexity();

static void BM_ConvexHull(benchmark::State& state) {
  const auto m = shapes::cube(5);
  for (auto _ : state)
    for (std::uint64_t mask = 1; mask < 4096; mask += 97)
      benchmark::DoNotOptimize(convex_hull(m, ElementSubset(m.size(), mask)));
}
BENCHMARK(BM_ConvexHull);

static void BM_Spec(benchmark::State& state) {
  const auto m = shapes::cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spec(m).size());
}
BENCHMARK(BM_Spec)->DenseRange(2, 4);

static void BM_FmsEnumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fms_enumerate(n).size());
}
BENCHMARK(BM_FmsEnumerate)->DenseRange(2, 4);

static void BM_FmsMajorityClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fms_majority_closure(n).size());
}
BENCHMARK(BM_FmsMajorityClosure)->DenseRange(2, 5);
