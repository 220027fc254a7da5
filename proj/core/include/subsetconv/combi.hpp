#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "subsetconv/mask.hpp"
#include "subsetconv/optimize.hpp"
#include "subsetconv/products.hpp"
#include "subsetconv/ring.hpp"
#include "subsetconv/set_function.hpp"
#include "subsetconv/steiner.hpp"

namespace subsetconv::combi {

// Unweighted undirected graph on vertices 1..n, stored as neighbourhood masks.
class SimpleGraph {
public:
  SimpleGraph() = default;
  SimpleGraph(int n_vertices, const std::vector<std::pair<int, int>>& edges);
  // Drops the weights.
  static SimpleGraph from_weighted(const steiner::WeightedGraph& g);

  int vertex_count() const noexcept { return n_; }
  GroundSet ground() const { return GroundSet(n_); }
  // 0-based vertex; bit i of the result is vertex i + 1.
  Mask neighbours(int v) const { return adj_[v]; }
  bool is_independent(Mask s) const;
  bool is_clique(Mask s) const;

private:
  int n_ = 0;
  std::vector<Mask> adj_;
};

// Number of ordered k-tuples of pairwise disjoint sets covering the ground set
// weighted by the product of f: f^{*k}(N).
template <Ring T>
T count_partitions(const SetFunction<T>& f, int k) {
  return convolve_power(f, k, ProductMode::subset())[f.ground().full()];
}

// 1 on independent sets, the empty set included.
SetFunction<BigInt> independent_set_indicator(const SimpleGraph& g);

// Proper colourings with k labelled colours, empty classes allowed.
BigInt count_proper_colorings(const SimpleGraph& g, int k);

struct ColorableSubgraphs {
  SetFunction<BigInt> counts;  // proper k-colourings of the subgraph induced by each S
  std::vector<Mask> maximal;   // inclusion-maximal S with a positive count, ascending
};

ColorableSubgraphs colorable_subgraphs(const SimpleGraph& g, int k);

// Smallest k with a proper k-colouring (0 for the empty graph).
int chromatic_number(const SimpleGraph& g);

struct CliquePacking {
  BigInt count;  // f^{pack k}(N) for f = indicator of cliques of size >= ell
  bool exists = false;
};

CliquePacking clique_packing(const SimpleGraph& g, int k, int ell);

struct BranchingSpec {
  SetFunction<Rational> f;
  Rational alpha;  // split probability, 0 <= alpha <= 1

  BranchingSpec(SetFunction<Rational> leaf_values, Rational split_probability);
};

// Expected product of leaf values of the random hierarchical split, for every S:
//   g(S) = (1 - alpha) f(S) + alpha / (2^|S| - 2) * sum over {} != T != S of g(T) g(S \ T)
// with g(S) = f(S) for |S| <= 1.
SetFunction<Rational> branching_expectation(const BranchingSpec& spec);

struct PathwayInstance {
  steiner::WeightedGraph graph;
  std::vector<bool> allowed_leaf;  // indexed by 0-based vertex
  int k = 1;
  Rational delta;
  std::uint64_t seed = 0;

  PathwayInstance(steiner::WeightedGraph g, const std::vector<int>& leaves, int tree_size, Rational failure_probability,
                  std::uint64_t rng_seed);
};

// Minimum weight of a colourful k-vertex tree rooted at each vertex whose
// leaves lie in the allowed set. `coloring` gives each vertex a colour in 1..k.
std::vector<ExtendedWeight> pathway_trial(const PathwayInstance& inst, std::span<const int> coloring);

// ceil(e^k ln(1/delta)).
std::uint64_t pathway_trial_count(int k, const Rational& delta);

// Colouring used by trial `trial`; a pure function of (seed, trial).
std::vector<int> pathway_coloring(int n_vertices, int k, std::uint64_t seed, std::uint64_t trial);

// Per-vertex minimum over pathway_trial_count(k, delta) seeded trials.
std::vector<ExtendedWeight> pathway_search(const PathwayInstance& inst);

}  // namespace subsetconv::combi
