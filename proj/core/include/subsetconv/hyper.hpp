#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subsetconv/mask.hpp"
#include "subsetconv/optimize.hpp"

namespace subsetconv::hyper {

struct Hyperedge {
  Mask vertices = 0;  // vertex i (1-based) <-> bit i-1
  std::int64_t w = 0;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

class Hypergraph {
public:
  Hypergraph() = default;
  Hypergraph(int n_vertices, std::vector<Hyperedge> edges);
  // Hyperedges given as 1-based vertex lists.
  static Hypergraph from_lists(int n_vertices, const std::vector<std::pair<std::vector<int>, std::int64_t>>& edges);

  int vertex_count() const noexcept { return n_; }
  GroundSet ground() const { return GroundSet(n_); }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }

private:
  int n_ = 0;
  std::vector<Hyperedge> edges_;
};

struct HyperResult {
  std::optional<std::int64_t> weight;  // empty when infeasible
  std::vector<int> chosen;             // indices into edges(), ascending
  int rejected_candidates = 0;         // algebraic optima that failed the structural check

  bool feasible() const noexcept { return weight.has_value(); }
};

inline constexpr int kSolverMaxVertices = 20;
inline constexpr int kBruteMaxEdges = 14;

// Order of the non-associative powers: Left is f o (f^(k-1)), Right is (f^(k-1)) o f.
enum class Nesting { Left, Right };

// Minimum connected spanning subhypergraph via min-sum intersecting covering powers.
HyperResult mcsh(const Hypergraph& h, Nesting nesting = Nesting::Left);

// Minimum spanning hypertree via powers of the intersect-exactly-one product;
// every candidate is confirmed with is_tree before it is accepted.
HyperResult msth(const Hypergraph& h, Nesting nesting = Nesting::Left);

// Every pair of distinct vertices is joined by a path through the chosen edges.
bool is_connected_spanning(const Hypergraph& h, std::span<const int> chosen);

// Connected, and every pair of distinct vertices is joined by exactly one path
// (distinct vertices, distinct edges, consecutive vertices sharing the edge).
bool is_tree(const Hypergraph& h, std::span<const int> chosen);

// Exhaustive minimum over all edge subsets.
HyperResult hyper_brute(const Hypergraph& h, bool require_tree, int max_edges = kBruteMaxEdges);

}  // namespace subsetconv::hyper
