#include "subsetconv/combi.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "subsetconv/parallel.hpp"
#include "subsetconv/transform.hpp"

namespace subsetconv::combi {

SimpleGraph::SimpleGraph(int n_vertices, const std::vector<std::pair<int, int>>& edges) : n_(n_vertices) {
  if (n_vertices < 0 || n_vertices > kMaxGroundSize) {
    throw GuardError("graph size " + std::to_string(n_vertices) + " outside [0, " + std::to_string(kMaxGroundSize) + "]");
  }
  adj_.assign(static_cast<std::size_t>(n_vertices), 0);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n_ || v < 1 || v > n_) throw InvalidArgument("edge endpoint outside vertex range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adj_[u - 1] |= Mask{1} << (v - 1);
    adj_[v - 1] |= Mask{1} << (u - 1);
  }
}

SimpleGraph SimpleGraph::from_weighted(const steiner::WeightedGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return SimpleGraph(g.vertex_count(), edges);
}

bool SimpleGraph::is_independent(Mask s) const {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    if (adj_[std::countr_zero(rest)] & s) return false;
  }
  return true;
}

bool SimpleGraph::is_clique(Mask s) const {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((s & ~(Mask{1} << v) & ~adj_[v]) != 0) return false;
  }
  return true;
}

SetFunction<BigInt> independent_set_indicator(const SimpleGraph& g) {
  SetFunction<BigInt> f(g.ground());
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (g.is_independent(static_cast<Mask>(s))) f[static_cast<Mask>(s)] = 1;
  }
  return f;
}

namespace {

void require_positive(int k, const char* what) {
  if (k < 1) throw InvalidArgument(std::string(what) + " must be >= 1, got " + std::to_string(k));
}

}  // namespace

BigInt count_proper_colorings(const SimpleGraph& g, int k) {
  require_positive(k, "number of colours");
  return count_partitions(independent_set_indicator(g), k);
}

ColorableSubgraphs colorable_subgraphs(const SimpleGraph& g, int k) {
  require_positive(k, "number of colours");
  ColorableSubgraphs out{convolve_power(independent_set_indicator(g), k, ProductMode::subset()), {}};
  const GroundSet ground = g.ground();
  for (std::size_t si = 0; si < ground.subset_count(); ++si) {
    const Mask s = static_cast<Mask>(si);
    if (sgn(out.counts[s]) <= 0) continue;
    bool maximal = true;
    for (int v = 0; v < ground.size() && maximal; ++v) {
      const Mask bigger = s | (Mask{1} << v);
      if (bigger != s && sgn(out.counts[bigger]) > 0) maximal = false;
    }
    if (maximal) out.maximal.push_back(s);
  }
  return out;
}

int chromatic_number(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return 0;
  const SetFunction<BigInt> f = independent_set_indicator(g);
  const Mask all = g.ground().full();
  SetFunction<BigInt> power = f;
  for (int k = 1;; ++k) {
    if (sgn(power[all]) > 0) return k;
    power = subset_convolve(power, f);
  }
}

CliquePacking clique_packing(const SimpleGraph& g, int k, int ell) {
  require_positive(k, "number of cliques");
  require_positive(ell, "minimum clique size");
  SetFunction<BigInt> f(g.ground());
  for (std::size_t s = 0; s < f.size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    if (popcount(m) >= ell && g.is_clique(m)) f[m] = 1;
  }
  CliquePacking out;
  out.count = convolve_power(f, k, ProductMode::pack())[g.ground().full()];
  out.exists = sgn(out.count) > 0;
  return out;
}

BranchingSpec::BranchingSpec(SetFunction<Rational> leaf_values, Rational split_probability)
    : f(std::move(leaf_values)), alpha(std::move(split_probability)) {
  if (alpha < 0 || alpha > 1) throw InvalidArgument("split probability must lie in [0, 1], got " + alpha.get_str());
}

SetFunction<Rational> branching_expectation(const BranchingSpec& spec) {
  const SetFunction<Rational>& f = spec.f;
  const int n = f.n();
  const std::size_t size = f.size();
  SetFunction<Rational> g(f.ground());

  // ranked[j] is the zeta transform of g restricted to rank j; rank j is
  // final once level j is done, so each level convolves finished ranks only.
  std::vector<std::vector<Rational>> ranked(static_cast<std::size_t>(n) + 1);
  auto finish_rank = [&](int j) {
    auto& slice = ranked[j];
    slice.assign(size, Rational(0));
    for (std::size_t s = 0; s < size; ++s) {
      if (popcount(static_cast<Mask>(s)) == j) slice[s] = g[static_cast<Mask>(s)];
    }
    zeta_in_place<Rational>(std::span<Rational>(slice), n);
  };

  for (std::size_t s = 0; s < size; ++s) {
    if (popcount(static_cast<Mask>(s)) <= 1) g[static_cast<Mask>(s)] = f[static_cast<Mask>(s)];
  }
  if (n >= 1) finish_rank(1);

  const Rational stay = 1 - spec.alpha;
  std::vector<Rational> conv(size);
  for (int level = 2; level <= n; ++level) {
    for (std::size_t x = 0; x < size; ++x) {
      Rational acc = 0;
      if (popcount(static_cast<Mask>(x)) <= level) {
        for (int j = 1; j < level; ++j) acc += ranked[j][x] * ranked[level - j][x];
      }
      conv[x] = std::move(acc);
    }
    mobius_in_place<Rational>(std::span<Rational>(conv), n, level);
    const Rational splits = Rational((BigInt(1) << level) - 2);
    for (std::size_t s = 0; s < size; ++s) {
      const Mask m = static_cast<Mask>(s);
      if (popcount(m) != level) continue;
      g[m] = stay * f[m] + spec.alpha * conv[s] / splits;
    }
    finish_rank(level);
  }
  return g;
}

PathwayInstance::PathwayInstance(steiner::WeightedGraph g, const std::vector<int>& leaves, int tree_size,
                                 Rational failure_probability, std::uint64_t rng_seed)
    : graph(std::move(g)),
      allowed_leaf(static_cast<std::size_t>(graph.vertex_count()), false),
      k(tree_size),
      delta(std::move(failure_probability)),
      seed(rng_seed) {
  if (k < 1 || k > 20) throw InvalidArgument("tree size k must lie in [1, 20], got " + std::to_string(k));
  if (delta <= 0 || delta >= 1) throw InvalidArgument("failure probability must lie in (0, 1), got " + delta.get_str());
  for (int v : leaves) {
    if (v < 1 || v > graph.vertex_count()) throw InvalidArgument("leaf vertex " + std::to_string(v) + " out of range");
    allowed_leaf[v - 1] = true;
  }
}

namespace {

// Inserts a set bit at position `at`, shifting higher bits up.
Mask expand_with(Mask m, int at) {
  const Mask low = m & ((Mask{1} << at) - 1);
  return low | ((m >> at) << (at + 1)) | (Mask{1} << at);
}

constexpr std::int64_t kNone = steiner::kUnreachable;

}  // namespace

std::vector<ExtendedWeight> pathway_trial(const PathwayInstance& inst, std::span<const int> coloring) {
  const int n = inst.graph.vertex_count();
  const int k = inst.k;
  if (static_cast<int>(coloring.size()) != n) throw InvalidArgument("colouring must assign every vertex");
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (coloring[v] < 1 || coloring[v] > k) throw InvalidArgument("colour outside 1..k");
    color[v] = coloring[v] - 1;
  }
  const std::size_t subsets = std::size_t{1} << k;
  // best[v * subsets + S]: W(v, S), meaningful when S contains colour(v).
  std::vector<std::int64_t> best(static_cast<std::size_t>(n) * subsets, kNone);
  auto at = [&](int v, Mask s) -> std::int64_t& { return best[static_cast<std::size_t>(v) * subsets + s]; };

  for (int v = 0; v < n; ++v) {
    if (inst.allowed_leaf[v]) at(v, Mask{1} << color[v]) = 0;
  }
  const GroundSet rest_ground(k - 1);
  for (int level = 2; level <= k; ++level) {
    for (int v = 0; v < n; ++v) {
      const int c = color[v];
      const Mask own = Mask{1} << c;
      // B: two subtrees rooted at v sharing only v, both strictly smaller.
      std::optional<ExtendedWeightFunction> merged;
      if (level >= 3) {
        std::vector<ExtendedWeight> h(rest_ground.subset_count(), ExtendedWeight::infinity());
        for (std::size_t t = 1; t < h.size(); ++t) {
          if (popcount(static_cast<Mask>(t)) > level - 2) continue;
          const std::int64_t w = at(v, expand_with(static_cast<Mask>(t), c));
          if (w != kNone) h[t] = w;
        }
        const ExtendedWeightFunction hf(rest_ground, std::move(h));
        merged = opt_convolve(hf, hf, OptMode::MinSum);
      }
      for (std::size_t si = 0; si < subsets; ++si) {
        const Mask s = static_cast<Mask>(si);
        if (!(s & own) || popcount(s) != level) continue;
        const Mask others = s & ~own;
        std::int64_t value = kNone;
        // A: v has a single child u.
        for (const auto& arc : inst.graph.arcs(v)) {
          if (!(others >> color[arc.to] & 1)) continue;
          const std::int64_t sub = at(arc.to, others);
          if (sub != kNone) value = std::min(value, sub + arc.w);
        }
        if (merged) {
          // Drop colour c to index the (k-1)-bit ground set.
          const Mask packed = (others & (own - 1)) | ((others >> (c + 1)) << c);
          const ExtendedWeight& b = (*merged)[packed];
          if (b.is_finite()) value = std::min(value, b.value());
        }
        at(v, s) = value;
      }
    }
  }
  std::vector<ExtendedWeight> out(static_cast<std::size_t>(n), ExtendedWeight::infinity());
  const Mask full = static_cast<Mask>(subsets - 1);
  for (int v = 0; v < n; ++v) {
    if (at(v, full) != kNone) out[v] = at(v, full);
  }
  return out;
}

std::uint64_t pathway_trial_count(int k, const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw InvalidArgument("failure probability must lie in (0, 1)");
  const long double inv = mpq_class(1 / delta).get_d();
  const long double trials = std::ceil(std::exp(static_cast<long double>(k)) * std::log(inv));
  if (trials > 1e9L) throw GuardError("color coding would need more than 1e9 trials");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(trials));
}

std::vector<int> pathway_coloring(int n_vertices, int k, std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<int> out(static_cast<std::size_t>(n_vertices));
  for (int& c : out) c = static_cast<int>(rng() % static_cast<std::uint64_t>(k)) + 1;
  return out;
}

std::vector<ExtendedWeight> pathway_search(const PathwayInstance& inst) {
  const int n = inst.graph.vertex_count();
  const std::uint64_t trials = pathway_trial_count(inst.k, inst.delta);
  const std::size_t workers = std::min<std::uint64_t>(configured_threads(), trials);
  std::vector<std::vector<ExtendedWeight>> partial(workers,
                                                   std::vector<ExtendedWeight>(n, ExtendedWeight::infinity()));
  parallel_for(workers, [&](std::size_t w) {
    for (std::uint64_t t = w; t < trials; t += workers) {
      const auto result = pathway_trial(inst, pathway_coloring(n, inst.k, inst.seed, t));
      for (int v = 0; v < n; ++v) partial[w][v] = std::min(partial[w][v], result[v]);
    }
  });
  std::vector<ExtendedWeight> out(static_cast<std::size_t>(n), ExtendedWeight::infinity());
  for (const auto& p : partial) {
    for (int v = 0; v < n; ++v) out[v] = std::min(out[v], p[v]);
  }
  return out;
}

}  // namespace subsetconv::combi
