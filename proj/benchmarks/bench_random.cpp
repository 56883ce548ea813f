#include <benchmark/benchmark.h>

#include <cstdint>

#include "sts/random.hpp"

static void BM_TriangleRemoval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sts::triangle_removal(n, n * (n - 1) / 6, seed++));
}
BENCHMARK(BM_TriangleRemoval)->Arg(19)->Arg(99);

static void BM_RandomSts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sts::random_sts(n, seed++));
}
BENCHMARK(BM_RandomSts)->Arg(19)->Arg(43);
