#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "subsetconv/subsetconv.hpp"

namespace bench {

inline subsetconv::SetFunction<subsetconv::CheckedInt> random_ints(int n, std::int64_t bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  subsetconv::SetFunction<subsetconv::CheckedInt> f{subsetconv::GroundSet(n)};
  for (auto& v : f.values()) v = subsetconv::CheckedInt(d(rng));
  return f;
}

inline subsetconv::ExtendedWeightFunction random_weights(int n, std::int64_t bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, bound);
  std::vector<subsetconv::ExtendedWeight> w(std::size_t{1} << n);
  for (auto& x : w) x = d(rng);
  return subsetconv::ExtendedWeightFunction(subsetconv::GroundSet(n), std::move(w));
}

// spanning path plus random extra edges, weights in [1, max_w]
inline subsetconv::steiner::WeightedGraph random_connected_graph(int n, int m, std::int64_t max_w, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dw(1, max_w);
  std::uniform_int_distribution<int> dv(1, n);
  std::vector<subsetconv::steiner::Edge> edges;
  for (int v = 2; v <= n; ++v) edges.push_back({v - 1, v, dw(rng)});
  while (static_cast<int>(edges.size()) < m) {
    const int u = dv(rng), v = dv(rng);
    if (u != v) edges.push_back({u, v, dw(rng)});
  }
  return subsetconv::steiner::WeightedGraph(n, edges, max_w);
}

}  // namespace bench
