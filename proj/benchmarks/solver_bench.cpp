#include <benchmark/benchmark.h>

#include "entrobound/conductor.hpp"
#include "entrobound/counting.hpp"
#include "entrobound/doublewell.hpp"
#include "entrobound/sampling.hpp"

using namespace entrobound;

static void BM_ShootProfile(benchmark::State& state) {
  const double amplitude = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(shoot_profile(amplitude));
  }
}
BENCHMARK(BM_ShootProfile)->Arg(10)->Arg(50)->Arg(98);

static void BM_ScalingExponent(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scaling_exponent(0.98));
  }
}
BENCHMARK(BM_ScalingExponent);

static void BM_MaximizeRatio(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximize_ratio());
  }
}
BENCHMARK(BM_MaximizeRatio);

static void BM_ExactLogCount(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_log_count({n, 3 * n, Statistics::boson}));
  }
}
BENCHMARK(BM_ExactLogCount)->Arg(1000)->Arg(1'000'000'000);

static void BM_OnionReport(benchmark::State& state) {
  RandomEngine rng(1);
  const OnionScene scene = sample_onion_scene(rng, Mechanism::plasma);
  for (auto _ : state) {
    benchmark::DoNotOptimize(onion_report(scene, Mechanism::plasma));
  }
}
BENCHMARK(BM_OnionReport);

static void BM_SceneSampling(benchmark::State& state) {
  RandomEngine rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_coax_scene(rng));
  }
}
BENCHMARK(BM_SceneSampling);

BENCHMARK_MAIN();
