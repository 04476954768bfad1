#include <benchmark/benchmark.h>

#include "gordian/families.hpp"
#include "gordian/invariants.hpp"
#include "gordian/random.hpp"
#include "gordian/skein.hpp"
#include "gordian/tangle.hpp"

using namespace gordian;

static void BM_StateSum(benchmark::State& state) {
  Rng rng(1);
  GaussCode g = random_gauss(rng, static_cast<int>(state.range(0)));
  BracketOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(bracket(g, opt));
}
BENCHMARK(BM_StateSum)->DenseRange(4, 16, 4);

static void BM_StateSumVK(benchmark::State& state) {
  GaussCode g = vkn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bracket(g));
}
BENCHMARK(BM_StateSumVK)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_TangleRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vkn_bracket(n));
}
BENCHMARK(BM_TangleRoute)->RangeMultiplier(2)->Range(1, 32)->Unit(benchmark::kMicrosecond);

static void BM_ToPlanar(benchmark::State& state) {
  Rng rng(2);
  GaussCode g = random_gauss(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_planar(g));
}
BENCHMARK(BM_ToPlanar)->RangeMultiplier(2)->Range(4, 64);

static void BM_C0Km(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c0_Km(m));
}
BENCHMARK(BM_C0Km)->RangeMultiplier(4)->Range(1, 256);

static void BM_SkeinTree(benchmark::State& state) {
  SkeinPtr t = build_km_tree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_c0(*t));
}
BENCHMARK(BM_SkeinTree)->RangeMultiplier(4)->Range(1, 64);

BENCHMARK_MAIN();
