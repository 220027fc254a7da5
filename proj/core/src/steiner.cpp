#include "subsetconv/steiner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <utility>

#include "subsetconv/error.hpp"
#include "subsetconv/optimize.hpp"
#include "subsetconv/parallel.hpp"

namespace subsetconv::steiner {

WeightedGraph::WeightedGraph(int n_vertices, const std::vector<Edge>& edges, std::int64_t max_weight)
    : n_(n_vertices), adj_(static_cast<std::size_t>(std::max(n_vertices, 0))) {
  if (n_vertices < 0) throw InvalidArgument("negative vertex count");
  std::map<std::pair<int, int>, std::int64_t> lightest;
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") outside vertex range 1.." +
                            std::to_string(n_));
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.w < 1) throw InvalidArgument("edge weight must be positive, got " + std::to_string(e.w));
    if (max_weight > 0 && e.w > max_weight) {
      throw InvalidArgument("edge weight " + std::to_string(e.w) + " exceeds declared bound " +
                            std::to_string(max_weight));
    }
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = lightest.emplace(key, e.w);
    if (!inserted) it->second = std::min(it->second, e.w);
  }
  max_weight_ = max_weight;
  for (const auto& [key, w] : lightest) {
    edges_.push_back({key.first, key.second, w});
    adj_[key.first - 1].push_back({key.second - 1, w});
    adj_[key.second - 1].push_back({key.first - 1, w});
    if (max_weight == 0) max_weight_ = std::max(max_weight_, w);
  }
}

std::optional<std::int64_t> WeightedGraph::weight(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return std::nullopt;
  for (const Arc& a : adj_[u - 1]) {
    if (a.to == v - 1) return a.w;
  }
  return std::nullopt;
}

std::vector<Edge> DistanceMatrix::path_edges(const WeightedGraph& g, int u, int v) const {
  std::vector<Edge> out;
  if (at(u, v) == kUnreachable) throw InvalidArgument("no path between the requested vertices");
  for (int cur = v; cur != u;) {
    const int prev = pred_[static_cast<std::size_t>(u) * n_ + cur];
    out.push_back({std::min(prev, cur) + 1, std::max(prev, cur) + 1, *g.weight(prev + 1, cur + 1)});
    cur = prev;
  }
  return out;
}

DistanceMatrix apsp(const WeightedGraph& graph) {
  const int n = graph.vertex_count();
  const auto nn = static_cast<std::size_t>(n) * n;
  std::vector<std::int64_t> dist(nn, kUnreachable);
  std::vector<int> pred(nn, -1);
  using Item = std::pair<std::int64_t, int>;
  for (int src = 0; src < n; ++src) {
    std::int64_t* d = dist.data() + static_cast<std::size_t>(src) * n;
    int* p = pred.data() + static_cast<std::size_t>(src) * n;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    d[src] = 0;
    heap.push({0, src});
    while (!heap.empty()) {
      auto [du, u] = heap.top();
      heap.pop();
      if (du != d[u]) continue;
      for (const auto& arc : graph.arcs(u)) {
        const std::int64_t nd = du + arc.w;
        if (nd < d[arc.to]) {
          d[arc.to] = nd;
          p[arc.to] = u;
          heap.push({nd, arc.to});
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(dist), std::move(pred));
}

SteinerInstance::SteinerInstance(WeightedGraph g, std::vector<int> k) : graph(std::move(g)), terminals(std::move(k)) {
  if (static_cast<int>(terminals.size()) > kMaxGroundSize) {
    throw GuardError("at most " + std::to_string(kMaxGroundSize) + " terminals supported");
  }
  std::vector<int> sorted = terminals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("terminals must be distinct");
  }
  for (int t : terminals) {
    if (t < 1 || t > graph.vertex_count()) throw InvalidArgument("terminal " + std::to_string(t) + " outside vertex range");
  }
}

namespace {

std::int64_t add_or_unreachable(std::int64_t a, std::int64_t b) {
  if (a == kUnreachable || b == kUnreachable) return kUnreachable;
  return a + b;
}

// Terminals except the root, as 0-based vertices; bit i <-> ground[i].
std::vector<int> ground_terminals(const SteinerInstance& inst) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < inst.terminals.size(); ++i) out.push_back(inst.terminals[i] - 1);
  return out;
}

void fill_base_levels(DWTables& w, const std::vector<int>& ground, const DistanceMatrix& d) {
  const int n = w.vertex_count();
  for (int q = 0; q < n; ++q) {
    w.weight(0, q) = 0;
    for (std::size_t i = 0; i < ground.size(); ++i) w.weight(Mask{1} << i, q) = d.at(q, ground[i]);
  }
}

struct ClassicState {
  DWTables w;
  std::vector<int> choice;  // (X, q) -> p
  std::vector<Mask> split;  // (X, p) -> D
};

ClassicState classic_state(const SteinerInstance& inst, const DistanceMatrix& d) {
  const int n = inst.graph.vertex_count();
  const std::vector<int> ground = ground_terminals(inst);
  const int k = static_cast<int>(ground.size());
  const std::size_t subsets = std::size_t{1} << k;
  const std::int64_t sentinel = std::max<std::int64_t>(n - 1, 0) * inst.graph.max_weight() + 1;
  auto cap = [sentinel](std::int64_t v) { return v == kUnreachable || v > sentinel ? sentinel : v; };
  auto sum = [sentinel](std::int64_t a, std::int64_t b) { return std::min(a + b, sentinel); };

  ClassicState st{DWTables(n, k), std::vector<int>(subsets * n, -1), std::vector<Mask>(subsets * n, 0)};
  fill_base_levels(st.w, ground, d);
  for (std::size_t x = 0; x < subsets; ++x) {
    for (int q = 0; q < n; ++q) st.w.weight(static_cast<Mask>(x), q) = cap(st.w.weight(static_cast<Mask>(x), q));
  }
  std::vector<std::int64_t> g(n);
  for (std::size_t xi = 1; xi < subsets; ++xi) {
    const Mask x = static_cast<Mask>(xi);
    if (popcount(x) < 2) continue;
    for (int p = 0; p < n; ++p) {
      std::int64_t best = sentinel;
      Mask best_d = 0;
      for (Mask part = (x - 1) & x; part != 0; part = (part - 1) & x) {
        const std::int64_t c = sum(st.w.weight(part, p), st.w.weight(x & ~part, p));
        if (c < best) {
          best = c;
          best_d = part;
        }
      }
      g[p] = best;
      st.split[xi * n + p] = best_d;
    }
    for (int q = 0; q < n; ++q) {
      std::int64_t best = sentinel;
      int best_p = -1;
      for (int p = 0; p < n; ++p) {
        const std::int64_t c = sum(cap(d.at(q, p)), g[p]);
        if (c < best) {
          best = c;
          best_p = p;
        }
      }
      st.w.weight(x, q) = best;
      st.choice[xi * n + q] = best_p;
    }
  }
  for (std::size_t x = 0; x < subsets; ++x) {
    for (int q = 0; q < n; ++q) {
      auto& v = st.w.weight(static_cast<Mask>(x), q);
      if (v >= sentinel) v = kUnreachable;
    }
  }
  return st;
}

// f_p restricted to the band 1 <= |X| <= level - 1, infinite elsewhere.
ExtendedWeightFunction level_function(const DWTables& w, int p, int level) {
  const GroundSet ground(w.ground_size());
  std::vector<ExtendedWeight> values(ground.subset_count(), ExtendedWeight::infinity());
  for (std::size_t x = 1; x < values.size(); ++x) {
    const int r = popcount(static_cast<Mask>(x));
    if (r >= level) continue;
    const std::int64_t v = w.weight(static_cast<Mask>(x), p);
    if (v != kUnreachable) values[x] = v;
  }
  return ExtendedWeightFunction(ground, std::move(values));
}

class TreeBuilder {
public:
  TreeBuilder(const SteinerInstance& inst, const DistanceMatrix& d) : inst_(inst), d_(d) {}

  void add_path(int u, int v) {
    if (u == v) return;
    for (const Edge& e : d_.path_edges(inst_.graph, u, v)) edges_.emplace(std::pair{e.u, e.v}, e.w);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& [key, w] : edges_) out.push_back({key.first, key.second, w});
    return out;
  }

private:
  const SteinerInstance& inst_;
  const DistanceMatrix& d_;
  std::map<std::pair<int, int>, std::int64_t> edges_;
};

std::int64_t edge_weight_sum(const std::vector<Edge>& edges) {
  std::int64_t s = 0;
  for (const Edge& e : edges) s += e.w;
  return s;
}

// At most one terminal: the empty tree.
SteinerResult trivial_result() { return SteinerResult{0, {}}; }

SteinerResult finish(std::int64_t weight, const TreeBuilder& builder) {
  SteinerResult r{weight, builder.edges()};
  if (edge_weight_sum(r.tree_edges) != weight) {
    throw std::logic_error("reconstructed Steiner tree weight " + std::to_string(edge_weight_sum(r.tree_edges)) +
                           " differs from optimum " + std::to_string(weight));
  }
  return r;
}

}  // namespace

DWTables dreyfus_wagner_classic_tables(const SteinerInstance& inst, const DistanceMatrix& d) {
  return classic_state(inst, d).w;
}

DWTables dreyfus_wagner_fast_tables(const SteinerInstance& inst, const DistanceMatrix& d) {
  const int n = inst.graph.vertex_count();
  const std::vector<int> ground = ground_terminals(inst);
  const int k = static_cast<int>(ground.size());
  const std::size_t subsets = std::size_t{1} << k;
  DWTables w(n, k);
  fill_base_levels(w, ground, d);

  std::vector<std::int64_t> g(subsets * n, kUnreachable);  // g_p(X) for the current level
  for (int level = 2; level <= k; ++level) {
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t pi) {
      const int p = static_cast<int>(pi);
      const ExtendedWeightFunction fp = level_function(w, p, level);
      const ExtendedWeightFunction gp = opt_product(fp, fp, OptMode::MinSum, ProductMode::cover(), level);
      for (std::size_t x = 0; x < subsets; ++x) {
        if (popcount(static_cast<Mask>(x)) != level) continue;
        const ExtendedWeight& v = gp[static_cast<Mask>(x)];
        g[x * n + p] = v.is_finite() ? v.value() : kUnreachable;
      }
    });
    for (std::size_t x = 0; x < subsets; ++x) {
      if (popcount(static_cast<Mask>(x)) != level) continue;
      for (int q = 0; q < n; ++q) {
        std::int64_t best = kUnreachable;
        for (int p = 0; p < n; ++p) best = std::min(best, add_or_unreachable(d.at(q, p), g[x * n + p]));
        w.weight(static_cast<Mask>(x), q) = best;
      }
    }
  }
  return w;
}

SteinerResult dreyfus_wagner_classic(const SteinerInstance& inst) {
  if (inst.terminals.size() <= 1) return trivial_result();
  const DistanceMatrix d = apsp(inst.graph);
  const ClassicState st = classic_state(inst, d);
  const std::vector<int> ground = ground_terminals(inst);
  const int root = inst.terminals.back() - 1;
  const Mask all = static_cast<Mask>((std::size_t{1} << ground.size()) - 1);
  const std::int64_t best = st.w.weight(all, root);
  if (best == kUnreachable) return {};

  const int n = inst.graph.vertex_count();
  TreeBuilder builder(inst, d);
  std::function<void(Mask, int)> trace = [&](Mask x, int q) {
    if (x == 0) return;
    if (popcount(x) == 1) {
      builder.add_path(q, ground[std::countr_zero(x)]);
      return;
    }
    const int p = st.choice[static_cast<std::size_t>(x) * n + q];
    const Mask part = st.split[static_cast<std::size_t>(x) * n + p];
    builder.add_path(q, p);
    trace(part, p);
    trace(x & ~part, p);
  };
  trace(all, root);
  return finish(best, builder);
}

SteinerResult dreyfus_wagner_fast(const SteinerInstance& inst) {
  if (inst.terminals.size() <= 1) return trivial_result();
  const DistanceMatrix d = apsp(inst.graph);
  const DWTables w = dreyfus_wagner_fast_tables(inst, d);
  const std::vector<int> ground = ground_terminals(inst);
  const int root = inst.terminals.back() - 1;
  const Mask all = static_cast<Mask>((std::size_t{1} << ground.size()) - 1);
  const std::int64_t best = w.weight(all, root);
  if (best == kUnreachable) return {};

  const int n = inst.graph.vertex_count();
  TreeBuilder builder(inst, d);
  // Splits are re-derived from the stored W tables: the lowest p whose
  // covering split reaches the target, first witness in submask order.
  std::function<void(Mask, int)> trace = [&](Mask x, int q) {
    if (x == 0) return;
    if (popcount(x) == 1) {
      builder.add_path(q, ground[std::countr_zero(x)]);
      return;
    }
    const std::int64_t target = w.weight(x, q);
    for (int p = 0; p < n; ++p) {
      if (d.at(q, p) == kUnreachable || d.at(q, p) > target) continue;
      const ExtendedWeightFunction fp = level_function(w, p, popcount(x));
      auto pair = find_witness(fp, fp, ProductMode::cover(), x, ExtendedWeight(target - d.at(q, p)));
      if (!pair) continue;
      builder.add_path(q, p);
      trace(pair->first, p);
      trace(pair->second, p);
      return;
    }
    throw std::logic_error("no Dreyfus-Wagner decomposition reproduces the stored weight");
  };
  trace(all, root);
  return finish(best, builder);
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

SteinerResult steiner_brute(const SteinerInstance& inst, int max_edges) {
  const auto& edges = inst.graph.edges();
  const int m = static_cast<int>(edges.size());
  if (m > max_edges) {
    throw GuardError("brute-force Steiner limited to " + std::to_string(max_edges) + " edges, got " +
                     std::to_string(m));
  }
  const int n = inst.graph.vertex_count();
  std::optional<std::int64_t> best;
  std::uint32_t best_set = 0;
  for (std::uint32_t set = 0; set < (std::uint32_t{1} << m); ++set) {
    DisjointSets ds(n);
    std::int64_t weight = 0;
    bool acyclic = true;
    for (int i = 0; i < m && acyclic; ++i) {
      if (!(set >> i & 1)) continue;
      acyclic = ds.unite(edges[i].u - 1, edges[i].v - 1);
      weight += edges[i].w;
    }
    if (!acyclic || (best && weight >= *best)) continue;
    bool connected = true;
    for (int t : inst.terminals) connected = connected && ds.find(t - 1) == ds.find(inst.terminals.front() - 1);
    if (!connected) continue;
    best = weight;
    best_set = set;
  }
  SteinerResult r;
  if (!best) return r;
  r.weight = best;
  for (int i = 0; i < m; ++i) {
    if (best_set >> i & 1) r.tree_edges.push_back(edges[i]);
  }
  return r;
}

std::optional<std::string> tree_defect(const SteinerInstance& inst, const SteinerResult& result) {
  if (!result.feasible()) {
    if (!result.tree_edges.empty()) return "infeasible result carries edges";
    return std::nullopt;
  }
  const int n = inst.graph.vertex_count();
  DisjointSets ds(n);
  std::int64_t total = 0;
  for (const Edge& e : result.tree_edges) {
    auto w = inst.graph.weight(e.u, e.v);
    if (!w) return "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") not in graph";
    if (*w != e.w) return "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") has wrong weight";
    if (!ds.unite(e.u - 1, e.v - 1)) return "edges contain a cycle";
    total += e.w;
  }
  if (total != *result.weight) {
    return "edge weights sum to " + std::to_string(total) + ", reported " + std::to_string(*result.weight);
  }
  for (int t : inst.terminals) {
    if (ds.find(t - 1) != ds.find(inst.terminals.front() - 1)) return "terminal " + std::to_string(t) + " not connected";
  }
  // The tree's edges must form one component (besides untouched vertices).
  int root = -1;
  for (const Edge& e : result.tree_edges) {
    const int r = ds.find(e.u - 1);
    if (root == -1) root = r;
    if (r != root) return "edges form more than one component";
  }
  if (!inst.terminals.empty() && root != -1 && ds.find(inst.terminals.front() - 1) != root) {
    return "terminals not on the tree";
  }
  return std::nullopt;
}

}  // namespace subsetconv::steiner
