#include "affgr/identities.hpp"
#include "affgr/segments.hpp"
#include "affgr/smoothness.hpp"
#include "affgr/weyl.hpp"

#include <benchmark/benchmark.h>

using namespace affgr;

static void BM_NumbersGame(benchmark::State& state) {
  const AffineType t = AffineType::parse("E8");
  const CartanData& c = cartan(t);
  for (auto _ : state) {
    auto v = identity_vector(c);
    for (int k = 0; k < state.range(0); ++k) fire(c, v, k % 9);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NumbersGame)->Arg(1000)->Arg(10000);

static void BM_EnumerateQuotient(benchmark::State& state) {
  const AffineType t = AffineType::parse("E8");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quotient(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateQuotient)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_BruhatLeq(benchmark::State& state) {
  const AffineType t = AffineType::parse("F4");
  const auto layers = enumerate_quotient(t, static_cast<int>(state.range(0)));
  const auto& top = layers.back();
  const auto& mid = layers[layers.size() / 2];
  for (auto _ : state)
    for (const auto& w : top)
      for (const auto& v : mid) benchmark::DoNotOptimize(bruhat_leq(v, w));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(top.size() * mid.size()));
}
BENCHMARK(BM_BruhatLeq)->Arg(16)->Arg(24);

static void BM_ClassifyAll(benchmark::State& state) {
  const AffineType t = AffineType::parse("C3");
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassifyAll)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_PartitionSeries(benchmark::State& state) {
  const AffineType t = AffineType::parse("F4");
  for (auto _ : state) benchmark::DoNotOptimize(partition_series(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PartitionSeries)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_Factor(benchmark::State& state) {
  const AffineType t = AffineType::parse("D6");
  const auto layers = enumerate_quotient(t, 14);
  for (auto _ : state)
    for (const auto& w : layers.back()) benchmark::DoNotOptimize(pi(w));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(layers.back().size()));
}
BENCHMARK(BM_Factor);

BENCHMARK_MAIN();
