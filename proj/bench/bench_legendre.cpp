#include "convdual/fenchel.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace convdual;

namespace {

GridFunction1D input(std::size_t n) {
  return GridFunction1D::sample(-1.0, 2.0 / static_cast<double>(n - 1), n,
                                [](double x) { return x * x + std::abs(x - 0.25); });
}

void BM_Fast(benchmark::State& state) {
  const GridFunction1D g = input(static_cast<std::size_t>(state.range(0)));
  const GridSpec out = default_conjugate_grid(g);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_grid(g, out));
  state.SetComplexityN(state.range(0));
}

void BM_BruteSerial(benchmark::State& state) {
  const GridFunction1D g = input(static_cast<std::size_t>(state.range(0)));
  const GridSpec out = default_conjugate_grid(g);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_grid_brute(g, out));
  state.SetComplexityN(state.range(0));
}

void BM_BruteOmp(benchmark::State& state) {
  const GridFunction1D g = input(static_cast<std::size_t>(state.range(0)));
  const GridSpec out = default_conjugate_grid(g);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_grid_brute_omp(g, out));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Fast)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_BruteSerial)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_BruteOmp)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
