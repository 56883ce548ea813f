#include <benchmark/benchmark.h>

#include "sts/constructions.hpp"

static void BM_Bose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sts::bose(n));
}
BENCHMARK(BM_Bose)->Arg(27)->Arg(99)->Arg(303);

static void BM_Skolem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sts::skolem(n));
}
BENCHMARK(BM_Skolem)->Arg(25)->Arg(97)->Arg(301);

BENCHMARK_MAIN();
