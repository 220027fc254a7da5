#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>

#include "bench_common.hpp"

using namespace subsetconv;

namespace {

steiner::SteinerInstance steiner_instance(int terminals) {
  std::mt19937_64 rng(30);
  auto g = bench::random_connected_graph(40, 120, 2, rng);
  std::vector<int> t(static_cast<std::size_t>(terminals));
  std::iota(t.begin(), t.end(), 1);
  return steiner::SteinerInstance(std::move(g), std::move(t));
}

void BM_SteinerClassic(benchmark::State& state) {
  const auto inst = steiner_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(steiner::dreyfus_wagner_classic(inst));
}
BENCHMARK(BM_SteinerClassic)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_SteinerFast(benchmark::State& state) {
  const auto inst = steiner_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(steiner::dreyfus_wagner_fast(inst));
}
BENCHMARK(BM_SteinerFast)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

combi::SimpleGraph random_simple_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return combi::SimpleGraph(n, edges);
}

void BM_CountColorings(benchmark::State& state) {
  const auto g = random_simple_graph(static_cast<int>(state.range(0)), 0.4, 31);
  for (auto _ : state) benchmark::DoNotOptimize(combi::count_proper_colorings(g, 4));
}
BENCHMARK(BM_CountColorings)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_ChromaticNumber(benchmark::State& state) {
  const auto g = random_simple_graph(static_cast<int>(state.range(0)), 0.5, 32);
  for (auto _ : state) benchmark::DoNotOptimize(combi::chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_MinimumSpanningHypergraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> size(2, 3);
  std::uniform_int_distribution<int> vertex(1, n);
  std::uniform_int_distribution<std::int64_t> weight(1, 4);
  std::vector<std::pair<std::vector<int>, std::int64_t>> edges;
  for (int v = 2; v <= n; ++v) edges.push_back({{v - 1, v}, weight(rng)});
  for (int i = 0; i < 2 * n; ++i) {
    std::vector<int> e;
    for (int s = size(rng); static_cast<int>(e.size()) < s;) {
      const int v = vertex(rng);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    edges.push_back({e, weight(rng)});
  }
  const auto h = hyper::Hypergraph::from_lists(n, edges);
  for (auto _ : state) benchmark::DoNotOptimize(hyper::mcsh(h));
}
BENCHMARK(BM_MinimumSpanningHypergraph)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
