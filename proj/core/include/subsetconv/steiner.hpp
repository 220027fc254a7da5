#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "subsetconv/mask.hpp"

namespace subsetconv::steiner {

// Undirected edge between 1-based vertices.
struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t w = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected graph with positive integer weights. Parallel edges are collapsed
// to the lightest one; edges are kept sorted by (min endpoint, max endpoint).
class WeightedGraph {
public:
  struct Arc {
    int to;  // 0-based
    std::int64_t w;
  };

  WeightedGraph() = default;
  // max_weight = 0 infers M from the edges; otherwise every weight must be <= it.
  WeightedGraph(int n_vertices, const std::vector<Edge>& edges, std::int64_t max_weight = 0);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::int64_t max_weight() const noexcept { return max_weight_; }
  // Neighbours of a 0-based vertex.
  const std::vector<Arc>& arcs(int v) const { return adj_[v]; }
  // Weight of edge {u, v} (1-based), if present.
  std::optional<std::int64_t> weight(int u, int v) const;

private:
  int n_ = 0;
  std::int64_t max_weight_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> adj_;
};

inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

// All-pairs shortest paths with one shortest-path tree per source.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<std::int64_t> dist, std::vector<int> pred)
      : n_(n), dist_(std::move(dist)), pred_(std::move(pred)) {}

  int size() const noexcept { return n_; }
  // 0-based; kUnreachable when disconnected.
  std::int64_t at(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  // 1-based convenience.
  std::int64_t distance(int u, int v) const { return at(u - 1, v - 1); }
  // Edges (1-based) of the stored shortest path between 0-based u and v.
  std::vector<Edge> path_edges(const WeightedGraph& g, int u, int v) const;

private:
  int n_ = 0;
  std::vector<std::int64_t> dist_;
  std::vector<int> pred_;  // pred_[src * n + v]: previous vertex on the src -> v path, -1 at src
};

DistanceMatrix apsp(const WeightedGraph& graph);

struct SteinerInstance {
  WeightedGraph graph;
  std::vector<int> terminals;  // 1-based, distinct

  SteinerInstance() = default;
  SteinerInstance(WeightedGraph g, std::vector<int> k);
};

struct SteinerResult {
  std::optional<std::int64_t> weight;  // empty when the terminals are not mutually reachable
  std::vector<Edge> tree_edges;        // sorted

  bool feasible() const noexcept { return weight.has_value(); }
};

// Dreyfus-Wagner tables. The last terminal is the root r; the others form the
// ground set K' (terminal i <-> bit i). weight(X, q) is the optimal weight of a
// tree connecting {q} u X, for every vertex q (0-based).
class DWTables {
public:
  DWTables() = default;
  DWTables(int vertices, int ground) : n_(vertices), k_(ground), w_((std::size_t{1} << ground) * vertices, 0) {}

  int vertex_count() const noexcept { return n_; }
  int ground_size() const noexcept { return k_; }
  std::int64_t weight(Mask x, int q) const { return w_[static_cast<std::size_t>(x) * n_ + q]; }
  std::int64_t& weight(Mask x, int q) { return w_[static_cast<std::size_t>(x) * n_ + q]; }

private:
  int n_ = 0;
  int k_ = 0;
  std::vector<std::int64_t> w_;
};

// Classic bottom-up recursion, O(3^k n + 2^k n^2). Weights at or above the
// sentinel (n-1)M+1 are reported as kUnreachable.
DWTables dreyfus_wagner_classic_tables(const SteinerInstance& inst, const DistanceMatrix& d);
// Level-wise evaluation with min-sum covering products, O*(2^k n^2 M).
DWTables dreyfus_wagner_fast_tables(const SteinerInstance& inst, const DistanceMatrix& d);

SteinerResult dreyfus_wagner_classic(const SteinerInstance& inst);
SteinerResult dreyfus_wagner_fast(const SteinerInstance& inst);

inline constexpr int kBruteMaxEdges = 16;

// Minimum over all acyclic edge subsets connecting the terminals.
SteinerResult steiner_brute(const SteinerInstance& inst, int max_edges = kBruteMaxEdges);

// Structural check of a reported tree: edges exist in the graph, form an
// acyclic connected subgraph containing every terminal, and sum to the
// reported weight. Returns a description of the first defect, if any.
std::optional<std::string> tree_defect(const SteinerInstance& inst, const SteinerResult& result);

}  // namespace subsetconv::steiner
