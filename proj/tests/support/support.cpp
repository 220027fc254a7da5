#include "support.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>

namespace testsupport {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

bool pair_ok(ProductMode mode, unsigned s, unsigned u, unsigned v) {
  const int common = std::popcount(u & v);
  switch (mode.kind) {
    case ProductMode::Kind::Subset:
      return (u | v) == s && common == 0;
    case ProductMode::Kind::Cover:
      return (u | v) == s;
    case ProductMode::Kind::Pack:
      return ((u | v) & ~s) == 0 && common == 0;
    case ProductMode::Kind::IntersectCover:
      return (u | v) == s && common > 0;
    case ProductMode::Kind::ExactIntersection:
      return (u | v) == s && common == mode.ell;
    case ProductMode::Kind::Xor:
      return (u ^ v) == s;
  }
  return false;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

SetFunction<CheckedInt> ints(int n, const std::vector<std::int64_t>& v) {
  std::vector<CheckedInt> out(v.begin(), v.end());
  return SetFunction<CheckedInt>(GroundSet(n), std::move(out));
}

std::vector<std::int64_t> values_of(const SetFunction<CheckedInt>& f) {
  std::vector<std::int64_t> out;
  for (const auto& x : f.values()) out.push_back(x.value());
  return out;
}

std::vector<std::string> strings_of(const ExtendedWeightFunction& f) {
  std::vector<std::string> out;
  for (const auto& x : f.weights()) out.push_back(x.to_string());
  return out;
}

ExtendedWeightFunction weights(int n, const std::vector<std::int64_t>& v) {
  std::vector<ExtendedWeight> out;
  for (std::int64_t x : v) {
    if (x == kInf) out.push_back(ExtendedWeight::infinity());
    else if (x == kNegInf) out.push_back(ExtendedWeight::neg_infinity());
    else out.emplace_back(x);
  }
  return ExtendedWeightFunction(GroundSet(n), std::move(out));
}

std::vector<std::int64_t> naive_product(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& g, int n,
                                        ProductMode mode) {
  const unsigned size = 1u << n;
  std::vector<std::int64_t> out(size, 0);
  for (unsigned s = 0; s < size; ++s)
    for (unsigned u = 0; u < size; ++u)
      for (unsigned v = 0; v < size; ++v)
        if (pair_ok(mode, s, u, v)) out[s] += f[u] * g[v];
  return out;
}

std::vector<std::int64_t> naive_opt(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& g, int n,
                                    ProductMode mode, bool maximise) {
  const unsigned size = 1u << n;
  const std::int64_t absorb = maximise ? kNegInf : kInf;
  std::vector<std::int64_t> out(size, absorb);
  for (unsigned s = 0; s < size; ++s)
    for (unsigned u = 0; u < size; ++u)
      for (unsigned v = 0; v < size; ++v) {
        if (!pair_ok(mode, s, u, v) || f[u] == absorb || g[v] == absorb) continue;
        const std::int64_t t = f[u] + g[v];
        out[s] = maximise ? std::max(out[s], t) : std::min(out[s], t);
      }
  return out;
}

std::vector<std::int64_t> naive_zeta(const std::vector<std::int64_t>& f, int n) {
  const unsigned size = 1u << n;
  std::vector<std::int64_t> out(size, 0);
  for (unsigned x = 0; x < size; ++x)
    for (unsigned s = 0; s < size; ++s)
      if ((s & ~x) == 0) out[x] += f[s];
  return out;
}

std::vector<std::int64_t> naive_walsh(const std::vector<std::int64_t>& f, int n) {
  const unsigned size = 1u << n;
  std::vector<std::int64_t> out(size, 0);
  for (unsigned s = 0; s < size; ++s)
    for (unsigned t = 0; t < size; ++t) out[s] += (std::popcount(s & t) % 2 ? -1 : 1) * f[t];
  return out;
}

SetFunction<CheckedInt> random_ints(int n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<CheckedInt> v(std::size_t{1} << n);
  for (auto& x : v) x = d(rng);
  return SetFunction<CheckedInt>(GroundSet(n), std::move(v));
}

SetFunction<Rational> random_rationals(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  std::vector<Rational> v(std::size_t{1} << n);
  for (auto& x : v) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return SetFunction<Rational>(GroundSet(n), std::move(v));
}

ExtendedWeightFunction random_weights(int n, std::int64_t bound, double inf_rate, OptMode mode, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::bernoulli_distribution inf(inf_rate);
  std::vector<ExtendedWeight> v(std::size_t{1} << n);
  for (auto& x : v) x = inf(rng) ? opt_infinity(mode) : ExtendedWeight(d(rng));
  return ExtendedWeightFunction(GroundSet(n), std::move(v), bound);
}

steiner::WeightedGraph random_graph(int n, int m, std::int64_t max_w, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(m)));
  std::uniform_int_distribution<std::int64_t> w(1, max_w);
  std::vector<steiner::Edge> edges;
  for (auto [u, v] : all) edges.push_back({u, v, w(rng)});
  return steiner::WeightedGraph(n, edges);
}

steiner::WeightedGraph random_connected_graph(int n, int m, std::int64_t max_w, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> w(1, max_w);
  std::set<std::pair<int, int>> used;
  std::vector<steiner::Edge> edges;
  for (int v = 2; v <= n; ++v) {
    const int u = std::uniform_int_distribution<int>(1, v - 1)(rng);
    used.insert({u, v});
    edges.push_back({u, v, w(rng)});
  }
  const long max_edges = static_cast<long>(n) * (n - 1) / 2;
  std::uniform_int_distribution<int> vert(1, std::max(1, n));
  while (static_cast<long>(edges.size()) < std::min<long>(m, max_edges)) {
    int u = vert(rng), v = vert(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!used.insert({u, v}).second) continue;
    edges.push_back({u, v, w(rng)});
  }
  return steiner::WeightedGraph(n, edges);
}

hyper::Hypergraph random_hypergraph(int n, int m, std::int64_t max_w, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> w(1, max_w);
  std::uniform_int_distribution<Mask> mask(1, (Mask{1} << n) - 1);
  std::vector<hyper::Hyperedge> edges;
  for (int i = 0; i < m; ++i) {
    Mask e = mask(rng);
    // Keep mostly small edges so trees are common.
    while (std::popcount(e) > 3 && std::bernoulli_distribution(0.7)(rng)) e &= e - 1;
    edges.push_back({e, w(rng)});
  }
  return hyper::Hypergraph(n, std::move(edges));
}

std::uint64_t brute_colorings(const combi::SimpleGraph& g, int k) {
  const int n = g.vertex_count();
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (int v = 0; v < n && proper; ++v)
      for (int u = v + 1; u < n; ++u)
        if ((g.neighbours(v) >> u & 1) && c[u] == c[v]) {
          proper = false;
          break;
        }
    if (proper) ++count;
    int i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) break;
  }
  return count;
}

std::vector<ExtendedWeight> brute_pathway(const steiner::WeightedGraph& g, const std::vector<bool>& allowed, int k) {
  const int n = g.vertex_count();
  std::vector<ExtendedWeight> best(static_cast<std::size_t>(n), ExtendedWeight::infinity());
  if (k == 1) {
    for (int v = 0; v < n; ++v)
      if (allowed[v]) best[v] = 0;
    return best;
  }
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> pick;
  // Recursive choice of k-1 edges in increasing index order.
  auto visit = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == k - 1) {
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      Dsu dsu(n);
      std::int64_t w = 0;
      for (int i : pick) {
        const auto& e = edges[i];
        if (!dsu.join(e.u - 1, e.v - 1)) return;  // cycle
        ++deg[e.u - 1];
        ++deg[e.v - 1];
        w += e.w;
      }
      // k-1 acyclic edges: a tree on exactly k vertices iff all touched vertices are joined.
      int touched = 0;
      for (int d : deg) touched += d > 0;
      if (touched != k) return;
      int bad_leaves = 0;
      for (int v = 0; v < n; ++v) bad_leaves += deg[v] == 1 && !allowed[v];
      for (int v = 0; v < n; ++v) {
        if (deg[v] == 0) continue;
        const int bad_without_root = bad_leaves - (deg[v] == 1 && !allowed[v] ? 1 : 0);
        if (bad_without_root == 0) best[v] = std::min(best[v], ExtendedWeight(w));
      }
      return;
    }
    for (int i = start; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

std::int64_t mst_weight(const steiner::WeightedGraph& g) {
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.w < b.w; });
  Dsu dsu(g.vertex_count());
  std::int64_t total = 0;
  for (const auto& e : edges)
    if (dsu.join(e.u - 1, e.v - 1)) total += e.w;
  return total;
}

bool independent_tree_check(const steiner::SteinerInstance& inst, const steiner::SteinerResult& r) {
  if (!r.weight) return false;
  const int n = inst.graph.vertex_count();
  Dsu dsu(n);
  std::int64_t total = 0;
  for (const auto& e : r.tree_edges) {
    const auto w = inst.graph.weight(e.u, e.v);
    if (!w || *w != e.w) return false;
    if (!dsu.join(e.u - 1, e.v - 1)) return false;
    total += e.w;
  }
  for (int t : inst.terminals)
    if (dsu.find(t - 1) != dsu.find(inst.terminals[0] - 1)) return false;
  // Every tree vertex must hang off the terminals' component.
  for (const auto& e : r.tree_edges)
    if (dsu.find(e.u - 1) != dsu.find(inst.terminals[0] - 1)) return false;
  return total == *r.weight;
}

}  // namespace testsupport
