#include <benchmark/benchmark.h>

#include "bench_common.hpp"

using namespace subsetconv;

namespace {

void BM_Zeta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto f = bench::random_ints(n, 50, rng);
  for (auto _ : state) {
    auto v = f;
    zeta_in_place<CheckedInt>(v.values(), n);
    benchmark::DoNotOptimize(v.values().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{n} << (n - 1)));
}
BENCHMARK(BM_Zeta)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

void BM_Mobius(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto f = bench::random_ints(n, 50, rng);
  for (auto _ : state) {
    auto v = f;
    mobius_in_place<CheckedInt>(v.values(), n);
    benchmark::DoNotOptimize(v.values().data());
  }
}
BENCHMARK(BM_Mobius)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

void BM_RankedZeta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const auto f = bench::random_ints(n, 50, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ranked_zeta(f, n));
}
BENCHMARK(BM_RankedZeta)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);

void BM_WalshHadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  const auto f = bench::random_ints(n, 50, rng);
  for (auto _ : state) benchmark::DoNotOptimize(walsh_hadamard(f, false));
}
BENCHMARK(BM_WalshHadamard)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

void BM_ZetaBigInt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  const auto f = map_values<BigInt>(bench::random_ints(n, 50, rng), [](const CheckedInt& x) { return BigInt(x.value()); });
  for (auto _ : state) benchmark::DoNotOptimize(zeta_transform(f));
}
BENCHMARK(BM_ZetaBigInt)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
