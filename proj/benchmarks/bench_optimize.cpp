#include <benchmark/benchmark.h>

#include "bench_common.hpp"

using namespace subsetconv;

namespace {

void BM_MinSumConvolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto bound = state.range(1);
  std::mt19937_64 rng(20);
  const auto f = bench::random_weights(n, bound, rng), g = bench::random_weights(n, bound, rng);
  for (auto _ : state) benchmark::DoNotOptimize(opt_convolve(f, g, OptMode::MinSum));
}
BENCHMARK(BM_MinSumConvolve)->ArgsProduct({{6, 8, 10, 12}, {2, 4, 16}})->Unit(benchmark::kMillisecond);

void BM_DirectMinSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(21);
  const auto f = bench::random_weights(n, 4, rng), g = bench::random_weights(n, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::direct_opt_product(f, g, OptMode::MinSum, ProductMode::subset(), n));
  }
}
BENCHMARK(BM_DirectMinSum)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_OptWitness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(22);
  const auto f = bench::random_weights(n, 4, rng), g = bench::random_weights(n, 4, rng);
  const Mask all = (Mask{1} << n) - 1;
  const auto target = opt_convolve(f, g, OptMode::MinSum)[all];
  for (auto _ : state) {
    benchmark::DoNotOptimize(opt_witness(f, g, OptMode::MinSum, ProductMode::subset(), all, target));
  }
}
BENCHMARK(BM_OptWitness)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
