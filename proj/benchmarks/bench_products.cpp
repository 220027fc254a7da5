#include <benchmark/benchmark.h>

#include "bench_common.hpp"

using namespace subsetconv;

namespace {

// 32-bit word path: small magnitudes
void BM_SubsetConvolveSmall(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(10);
  const auto f = bench::random_ints(n, 50, rng), g = bench::random_ints(n, 50, rng);
  for (auto _ : state) benchmark::DoNotOptimize(subset_convolve(f, g));
}
BENCHMARK(BM_SubsetConvolveSmall)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

// 64-bit word path
void BM_SubsetConvolveWide(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  const auto f = bench::random_ints(n, std::int64_t{1} << 20, rng), g = bench::random_ints(n, std::int64_t{1} << 20, rng);
  for (auto _ : state) benchmark::DoNotOptimize(subset_convolve(f, g));
}
BENCHMARK(BM_SubsetConvolveWide)->DenseRange(10, 18, 2)->Unit(benchmark::kMillisecond);

void BM_SubsetConvolveBigInt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(12);
  auto to_big = [](const CheckedInt& x) { return BigInt(x.value()); };
  const auto f = map_values<BigInt>(bench::random_ints(n, 50, rng), to_big);
  const auto g = map_values<BigInt>(bench::random_ints(n, 50, rng), to_big);
  for (auto _ : state) benchmark::DoNotOptimize(subset_convolve(f, g));
}
BENCHMARK(BM_SubsetConvolveBigInt)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_DirectSubset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(13);
  const auto f = bench::random_ints(n, 50, rng), g = bench::random_ints(n, 50, rng);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::direct_product(f, g, ProductMode::subset(), n));
}
BENCHMARK(BM_DirectSubset)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_Product(benchmark::State& state, ProductMode mode) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(14);
  const auto f = bench::random_ints(n, 50, rng), g = bench::random_ints(n, 50, rng);
  for (auto _ : state) benchmark::DoNotOptimize(product(f, g, mode));
}
BENCHMARK_CAPTURE(BM_Product, cover, ProductMode::cover())->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Product, pack, ProductMode::pack())->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Product, icover, ProductMode::intersect_cover())->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Product, exact2, ProductMode::exact(2))->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Product, xor, ProductMode::xor_())->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_ConvolvePower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(15);
  const auto f = bench::random_ints(n, 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_power(f, 4, ProductMode::subset()));
}
BENCHMARK(BM_ConvolvePower)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
