#include <benchmark/benchmark.h>

#include <random>

#include "medianforge/deformation.hpp"
#include "medianforge/fixtures.hpp"

using namespace medianforge;

static void BM_Mhat(benchmark::State& state) {
  const DeformedGroup d(HMedianSet(FreeProduct(FiniteGroup::trivial(), 4), four_point_square()));
  const auto ball = d.words().ball(static_cast<std::size_t>(state.range(0)));
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::vector<std::size_t> idx(3 * 1024);
  for (auto& i : idx) i = pick(rng);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.mhat(ball[idx[k]], ball[idx[k + 1]], ball[idx[k + 2]]));
    k = (k + 3) % idx.size();
  }
}
BENCHMARK(BM_Mhat)->Arg(2)->Arg(4);

static void BM_VerifyNoM3(benchmark::State& state) {
  const DeformedGroup d(HMedianSet(FreeProduct(FiniteGroup::cyclic(2), 2), z2_two_orbit_chain()));
  VerifyOptions opts;
  opts.radius = static_cast<std::size_t>(state.range(0));
  opts.check_m3 = false;
  for (auto _ : state) benchmark::DoNotOptimize(verify_median_group(d, opts).passed());
}
BENCHMARK(BM_VerifyNoM3)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_MedianOpCensus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_median_ops(FiniteGroup::trivial(), n).size());
}
BENCHMARK(BM_MedianOpCensus)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_GroupOpCensus(benchmark::State& state) {
  const auto g = FiniteGroup::cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_median_group_ops(g).size());
}
BENCHMARK(BM_GroupOpCensus)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
