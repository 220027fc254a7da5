#include "subsetconv/hyper.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "subsetconv/error.hpp"

namespace subsetconv::hyper {

Hypergraph::Hypergraph(int n_vertices, std::vector<Hyperedge> edges) : n_(n_vertices), edges_(std::move(edges)) {
  const GroundSet ground(n_vertices);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Hyperedge& e = edges_[i];
    if (e.vertices == 0) throw InvalidArgument("hyperedge " + std::to_string(i + 1) + " is empty");
    if (!ground.contains(e.vertices)) throw InvalidArgument("hyperedge " + std::to_string(i + 1) + " outside vertex range");
    if (e.w < 1) throw InvalidArgument("hyperedge weight must be positive, got " + std::to_string(e.w));
  }
}

Hypergraph Hypergraph::from_lists(int n_vertices,
                                  const std::vector<std::pair<std::vector<int>, std::int64_t>>& edges) {
  std::vector<Hyperedge> out;
  for (const auto& [vertices, w] : edges) {
    Mask m = 0;
    for (int v : vertices) {
      if (v < 1 || v > n_vertices) throw InvalidArgument("hyperedge vertex " + std::to_string(v) + " out of range");
      const Mask bit = Mask{1} << (v - 1);
      if (m & bit) throw InvalidArgument("hyperedge repeats vertex " + std::to_string(v));
      m |= bit;
    }
    out.push_back({m, w});
  }
  return Hypergraph(n_vertices, std::move(out));
}

bool is_connected_spanning(const Hypergraph& h, std::span<const int> chosen) {
  const int n = h.vertex_count();
  if (n <= 1) return true;
  // Grow the component of vertex 1 until no chosen edge touches it from outside.
  Mask reached = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : chosen) {
      const Mask e = h.edges()[i].vertices;
      if ((e & reached) && (e & ~reached)) {
        reached |= e;
        grew = true;
      }
    }
  }
  return reached == h.ground().full();
}

namespace {

// Number of paths from `cur` to `target`, capped at `limit`.
int count_paths(const Hypergraph& h, std::span<const int> chosen, int cur, int target, Mask used_vertices,
                std::uint64_t used_edges, int limit) {
  int count = 0;
  for (std::size_t j = 0; j < chosen.size() && count < limit; ++j) {
    if (used_edges >> j & 1) continue;
    const Mask e = h.edges()[chosen[j]].vertices;
    if (!(e >> cur & 1)) continue;
    for (Mask next = e & ~used_vertices; next != 0 && count < limit; next &= next - 1) {
      const int z = std::countr_zero(next);
      if (z == target) {
        ++count;
      } else {
        count += count_paths(h, chosen, z, target, used_vertices | (Mask{1} << z), used_edges | (std::uint64_t{1} << j),
                             limit - count);
      }
    }
  }
  return count;
}

}  // namespace

bool is_tree(const Hypergraph& h, std::span<const int> chosen) {
  if (chosen.size() > 64) throw GuardError("is_tree supports at most 64 chosen edges");
  if (!is_connected_spanning(h, chosen)) return false;
  const int n = h.vertex_count();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (count_paths(h, chosen, x, y, Mask{1} << x, 0, 2) != 1) return false;
    }
  }
  return true;
}

namespace {

std::int64_t weight_of(const Hypergraph& h, std::span<const int> chosen) {
  std::int64_t s = 0;
  for (int i : chosen) s += h.edges()[i].w;
  return s;
}

class PowerScheme {
public:
  PowerScheme(const Hypergraph& h, ProductMode product, Nesting nesting)
      : h_(h), product_(product), nesting_(nesting) {
    const GroundSet ground = h.ground();
    std::vector<ExtendedWeight> f(ground.subset_count(), ExtendedWeight::infinity());
    for (const Hyperedge& e : h.edges()) f[e.vertices] = std::min(f[e.vertices], ExtendedWeight(e.w));
    f_ = ExtendedWeightFunction(ground, std::move(f));
  }

  HyperResult solve(bool require_tree) {
    const int n = h_.vertex_count();
    HyperResult result;
    const Mask all = h_.ground().full();
    if (n == 0 || (n == 1 && !f_[all].is_finite())) {
      // Nothing to cover: the empty selection is connected and spanning.
      result.weight = 0;
      return result;
    }
    powers_.push_back(f_);
    for (int k = 2; k <= n - 1; ++k) {
      const ExtendedWeightFunction& prev = powers_.back();
      powers_.push_back(nesting_ == Nesting::Left ? opt_product(f_, prev, OptMode::MinSum, product_)
                                                  : opt_product(prev, f_, OptMode::MinSum, product_));
    }
    std::vector<std::pair<ExtendedWeight, int>> candidates;
    for (int k = 1; k <= static_cast<int>(powers_.size()); ++k) {
      if (powers_[k - 1][all].is_finite()) candidates.emplace_back(powers_[k - 1][all], k);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [value, k] : candidates) {
      std::vector<int> chosen;
      trace(k, all, value, chosen);
      std::sort(chosen.begin(), chosen.end());
      chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
      const bool ok = weight_of(h_, chosen) == value.value() && is_connected_spanning(h_, chosen) &&
                      (!require_tree || is_tree(h_, chosen));
      if (!ok) {
        ++result.rejected_candidates;
        continue;
      }
      result.weight = value.value();
      result.chosen = std::move(chosen);
      return result;
    }
    return result;
  }

private:
  int edge_index(Mask vertices, std::int64_t w) const {
    const auto& edges = h_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].vertices == vertices && edges[i].w == w) return static_cast<int>(i);
    }
    throw std::logic_error("traced hyperedge not present");
  }

  void trace(int k, Mask s, const ExtendedWeight& value, std::vector<int>& chosen) const {
    if (k == 1) {
      chosen.push_back(edge_index(s, value.value()));
      return;
    }
    const ExtendedWeightFunction& prev = powers_[k - 2];
    if (nesting_ == Nesting::Left) {
      auto [edge, rest] = opt_witness(f_, prev, OptMode::MinSum, product_, s, value);
      chosen.push_back(edge_index(edge, f_[edge].value()));
      trace(k - 1, rest, prev[rest], chosen);
    } else {
      auto [rest, edge] = opt_witness(prev, f_, OptMode::MinSum, product_, s, value);
      chosen.push_back(edge_index(edge, f_[edge].value()));
      trace(k - 1, rest, prev[rest], chosen);
    }
  }

  const Hypergraph& h_;
  ProductMode product_;
  Nesting nesting_;
  ExtendedWeightFunction f_;
  std::vector<ExtendedWeightFunction> powers_;  // powers_[k-1] = f^k
};

void require_solver_size(const Hypergraph& h) {
  if (h.vertex_count() > kSolverMaxVertices) {
    throw GuardError("hypergraph solvers limited to " + std::to_string(kSolverMaxVertices) + " vertices");
  }
}

}  // namespace

HyperResult mcsh(const Hypergraph& h, Nesting nesting) {
  require_solver_size(h);
  return PowerScheme(h, ProductMode::intersect_cover(), nesting).solve(false);
}

HyperResult msth(const Hypergraph& h, Nesting nesting) {
  require_solver_size(h);
  return PowerScheme(h, ProductMode::exact(1), nesting).solve(true);
}

HyperResult hyper_brute(const Hypergraph& h, bool require_tree, int max_edges) {
  const int m = static_cast<int>(h.edges().size());
  if (m > max_edges) {
    throw GuardError("brute-force hypergraph search limited to " + std::to_string(max_edges) + " edges, got " +
                     std::to_string(m));
  }
  HyperResult best;
  std::vector<int> chosen;
  for (std::uint32_t set = 0; set < (std::uint32_t{1} << m); ++set) {
    chosen.clear();
    for (int i = 0; i < m; ++i) {
      if (set >> i & 1) chosen.push_back(i);
    }
    const std::int64_t w = weight_of(h, chosen);
    if (best.weight && w >= *best.weight) continue;
    if (!is_connected_spanning(h, chosen)) continue;
    // A lone vertex still takes a covering edge when one exists.
    if (h.vertex_count() == 1 && m > 0 && chosen.empty()) continue;
    if (require_tree && !is_tree(h, chosen)) continue;
    best.weight = w;
    best.chosen = chosen;
  }
  return best;
}

}  // namespace subsetconv::hyper
