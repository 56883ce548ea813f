#include <benchmark/benchmark.h>

#include "sts/constructions.hpp"
#include "sts/search.hpp"

static void BM_AlphaStar3(benchmark::State& state) {
  const sts::SteinerSystem s = state.range(0) == 7 ? sts::fano() : sts::s9();
  for (auto _ : state) benchmark::DoNotOptimize(sts::alpha_star(s, 3));
}
BENCHMARK(BM_AlphaStar3)->Arg(7)->Arg(9);

static void BM_McExact(benchmark::State& state) {
  const sts::SteinerSystem s = state.range(0) == 7 ? sts::fano() : sts::s9();
  for (auto _ : state) benchmark::DoNotOptimize(sts::mc_exact(s, 3));
}
BENCHMARK(BM_McExact)->Arg(7)->Arg(9);

static void BM_McExactSkolem13(benchmark::State& state) {
  const sts::SteinerSystem s = sts::skolem(13);
  for (auto _ : state) benchmark::DoNotOptimize(sts::mc_exact(s, 3));
}
BENCHMARK(BM_McExactSkolem13);
