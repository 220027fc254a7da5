#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "subsetconv/mask.hpp"
#include "subsetconv/parallel.hpp"
#include "subsetconv/ring.hpp"
#include "subsetconv/set_function.hpp"
#include "subsetconv/transform.hpp"

namespace subsetconv {

// Which pairs (U, V) contribute f(U) g(V) to the output at S.
//   Subset             U u V = S, U n V = {}
//   Cover              U u V = S
//   Pack               U, V subsets of S, U n V = {}
//   IntersectCover     U u V = S, U n V != {}
//   ExactIntersection  U u V = S, |U n V| = ell
//   Xor                U ^ V = S
struct ProductMode {
  enum class Kind { Subset, Cover, Pack, IntersectCover, ExactIntersection, Xor };

  Kind kind = Kind::Subset;
  int ell = 0;  // ExactIntersection only

  static constexpr ProductMode subset() { return {Kind::Subset, 0}; }
  static constexpr ProductMode cover() { return {Kind::Cover, 0}; }
  static constexpr ProductMode pack() { return {Kind::Pack, 0}; }
  static constexpr ProductMode intersect_cover() { return {Kind::IntersectCover, 0}; }
  static constexpr ProductMode exact(int ell) { return {Kind::ExactIntersection, ell}; }
  static constexpr ProductMode xor_() { return {Kind::Xor, 0}; }

  // CLI spelling: subset, cover, pack, icover, exact:<ell>, xor.
  std::string name() const;
  static ProductMode parse(std::string_view text);

  friend constexpr bool operator==(ProductMode, ProductMode) = default;
};

// Whether (u, v) is one of the pairs the mode sums over at s.
bool pair_in_mode(ProductMode mode, Mask s, Mask u, Mask v);

namespace detail {

template <Ring T, class Body>
void for_each_mask_chunk(std::size_t count, Body&& body) {
  const bool parallel = RingTraits<T>::parallel_safe && count >= kParallelPassThreshold;
  const std::size_t chunks = parallel ? configured_threads() : 1;
  if (chunks <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  parallel_for(chunks, [&](std::size_t c) { body(count * c / chunks, count * (c + 1) / chunks); });
}

}  // namespace detail

// out slice k at X = sum over j of a(j, X) * b(k - j, X).
template <Ring T>
RankedTable<T> rank_convolve(const RankedTable<T>& a, const RankedTable<T>& b, int r_max) {
  if (a.ground() != b.ground()) throw InvalidArgument("rank_convolve: ground set mismatch");
  if (r_max < 0 || r_max > a.r_max() + b.r_max()) {
    throw InvalidArgument("rank_convolve: r_max " + std::to_string(r_max) + " exceeds " +
                          std::to_string(a.r_max() + b.r_max()));
  }
  RankedTable<T> out(a.ground(), r_max);
  detail::for_each_mask_chunk<T>(a.ground().subset_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      const Mask m = static_cast<Mask>(x);
      auto ar = a.ranks(m);
      auto br = b.ranks(m);
      auto dst = out.ranks(m);
      for (int k = 0; k <= r_max; ++k) {
        const int lo = std::max(0, k - b.r_max());
        const int hi = std::min(k, a.r_max());
        for (int j = lo; j <= hi; ++j) dst[k] += ar[j] * br[k - j];
      }
    }
  });
  return out;
}

namespace detail {
// Word-level kernel for the checked 64-bit ring. Returns nullopt when the
// a-priori bound max|f| max|g| 2^n does not fit, in which case the caller
// falls back to checked arithmetic.
std::optional<SetFunction<CheckedInt>> subset_convolve_word(const SetFunction<CheckedInt>& f,
                                                            const SetFunction<CheckedInt>& g);
}  // namespace detail

// (f * g)(S) = sum over T subset of S of f(T) g(S \ T), via ranked transforms.
// Only the entries the read-out at (|S|, S) depends on are computed: slice k is
// needed at masks of popcount at most k, and is zero at X when k > 2|X|.
template <Ring T>
SetFunction<T> subset_convolve(const SetFunction<T>& f, const SetFunction<T>& g) {
  require_same_ground(f, g);
  if constexpr (std::is_same_v<T, CheckedInt>) {
    if (auto fast = detail::subset_convolve_word(f, g)) return std::move(*fast);
  }
  const int n = f.n();
  RankedTable<T> a = ranked_zeta(f, n);
  std::optional<RankedTable<T>> b_store;
  if (&f != &g) b_store.emplace(ranked_zeta(g, n));
  // Self-convolution may alias: slice k is written only after every read of
  // slices <= k at the same mask.
  const RankedTable<T>& b = b_store ? *b_store : a;

  detail::for_each_mask_chunk<T>(f.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      const Mask m = static_cast<Mask>(x);
      const int p = popcount(m);
      auto ar = a.ranks(m);
      auto br = b.ranks(m);
      for (int k = std::min(n, 2 * p); k >= p; --k) {
        const int lo = k - p;
        T acc = ar[lo] * br[k - lo];
        for (int j = lo + 1; j <= p; ++j) acc += ar[j] * br[k - j];
        a.ranks(m)[k] = std::move(acc);
      }
    }
  });

  for (int bit = 0; bit < n; ++bit) {
    detail::for_each_pair<T>(n, bit, [&](Mask lo, Mask hi) {
      auto dst = a.ranks(hi);
      auto src = a.ranks(lo);
      for (int k = popcount(hi); k <= n; ++k) dst[k] -= src[k];
    });
  }

  SetFunction<T> out(f.ground());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    out[m] = a.at(popcount(m), m);
  }
  return out;
}

// (f (*) g)(S) = sum over U u V = S of f(U) g(V): zeta, pointwise product,
// Möbius. With max_rank >= 0 only masks of popcount <= max_rank are computed;
// the rest of the output is zero.
template <Ring T>
SetFunction<T> cover_product(const SetFunction<T>& f, const SetFunction<T>& g, int max_rank = -1) {
  require_same_ground(f, g);
  const int n = f.n();
  SetFunction<T> za = f;
  zeta_in_place<T>(za.values(), n, max_rank);
  if (&f == &g) {
    for (std::size_t s = 0; s < za.size(); ++s) {
      const Mask m = static_cast<Mask>(s);
      if (max_rank < 0 || popcount(m) <= max_rank) {
        za[m] *= T(za[m]);
      } else {
        za[m] = ring_zero<T>();
      }
    }
  } else {
    SetFunction<T> zb = g;
    zeta_in_place<T>(zb.values(), n, max_rank);
    for (std::size_t s = 0; s < za.size(); ++s) {
      const Mask m = static_cast<Mask>(s);
      if (max_rank < 0 || popcount(m) <= max_rank) {
        za[m] *= zb[m];
      } else {
        za[m] = ring_zero<T>();
      }
    }
  }
  mobius_in_place<T>(za.values(), n, max_rank);
  return za;
}

template <Ring T>
SetFunction<T> all_ones(GroundSet ground) {
  return SetFunction<T>(ground, std::vector<T>(ground.subset_count(), ring_one<T>()));
}

template <Ring T>
SetFunction<T> delta_empty(GroundSet ground) {
  SetFunction<T> out(ground);
  out[0] = ring_one<T>();
  return out;
}

// Disjoint pairs inside S: f * g * 1.
template <Ring T>
SetFunction<T> packing_product(const SetFunction<T>& f, const SetFunction<T>& g) {
  return subset_convolve(subset_convolve(f, g), all_ones<T>(f.ground()));
}

template <Ring T>
SetFunction<T> intersect_cover_product(const SetFunction<T>& f, const SetFunction<T>& g) {
  SetFunction<T> out = cover_product(f, g);
  const SetFunction<T> disjoint = subset_convolve(f, g);
  for (std::size_t s = 0; s < out.size(); ++s) out[static_cast<Mask>(s)] -= disjoint[static_cast<Mask>(s)];
  return out;
}

// Covering pairs with |U n V| = ell. Rank |U| + |V| = |S| + ell is read out
// after the ranked Möbius inversion; U u V = S then forces the overlap size.
template <Ring T>
SetFunction<T> exact_intersection_product(const SetFunction<T>& f, const SetFunction<T>& g, int ell) {
  require_same_ground(f, g);
  const int n = f.n();
  if (ell < 0 || ell > n) {
    throw InvalidArgument("intersection size " + std::to_string(ell) + " outside [0, " + std::to_string(n) + "]");
  }
  const RankedTable<T> a = ranked_zeta(f, n);
  const RankedTable<T> b = ranked_zeta(g, n);
  const RankedTable<T> c = ranked_mobius(rank_convolve(a, b, n + ell));
  SetFunction<T> out(f.ground());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    out[m] = c.at(popcount(m) + ell, m);
  }
  return out;
}

// (f xor-conv g)(S) = sum over T of f(T) g(S ^ T).
template <Ring T>
SetFunction<T> xor_convolve(const SetFunction<T>& f, const SetFunction<T>& g) {
  require_same_ground(f, g);
  SetFunction<T> a = walsh_hadamard(f, false);
  const SetFunction<T> b = walsh_hadamard(g, false);
  for (std::size_t s = 0; s < a.size(); ++s) a[static_cast<Mask>(s)] *= b[static_cast<Mask>(s)];
  return walsh_hadamard(std::move(a), true);
}

template <Ring T>
SetFunction<T> product(const SetFunction<T>& f, const SetFunction<T>& g, ProductMode mode) {
  switch (mode.kind) {
    case ProductMode::Kind::Subset:
      return subset_convolve(f, g);
    case ProductMode::Kind::Cover:
      return cover_product(f, g);
    case ProductMode::Kind::Pack:
      return packing_product(f, g);
    case ProductMode::Kind::IntersectCover:
      return intersect_cover_product(f, g);
    case ProductMode::Kind::ExactIntersection:
      return exact_intersection_product(f, g, mode.ell);
    case ProductMode::Kind::Xor:
      return xor_convolve(f, g);
  }
  throw InvalidArgument("unknown product mode");
}

// k-fold product of f with itself by binary powering (O(log k) products).
// Only the associative Subset and Pack modes are accepted.
template <Ring T>
SetFunction<T> convolve_power(const SetFunction<T>& f, int k, ProductMode mode) {
  if (mode.kind != ProductMode::Kind::Subset && mode.kind != ProductMode::Kind::Pack) {
    throw InvalidArgument("convolve_power supports subset and pack modes only, got " + mode.name());
  }
  if (k < 1) throw InvalidArgument("convolve_power: k must be >= 1, got " + std::to_string(k));
  std::optional<SetFunction<T>> result;
  SetFunction<T> base = f;
  for (;;) {
    if (k & 1) result = result ? product(*result, base, mode) : base;
    k >>= 1;
    if (k == 0) break;
    base = product(base, base, mode);
  }
  return *result;
}

}  // namespace subsetconv
