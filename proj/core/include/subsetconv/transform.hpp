#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "subsetconv/mask.hpp"
#include "subsetconv/parallel.hpp"
#include "subsetconv/ring.hpp"
#include "subsetconv/set_function.hpp"

namespace subsetconv {

namespace detail {

inline constexpr std::size_t kParallelPassThreshold = std::size_t{1} << 15;

// Visits every pair (lo, lo | 2^bit) with lo lacking the bit. Pairs are disjoint,
// so chunks of one pass may run concurrently.
template <Ring T, class Body>
void for_each_pair(int n, int bit, Body&& body) {
  const std::size_t half = std::size_t{1} << (n - 1);
  const Mask b = Mask{1} << bit;
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Mask lo = static_cast<Mask>(((i >> bit) << (bit + 1)) | (i & (b - 1)));
      body(lo, lo | b);
    }
  };
  const bool parallel = RingTraits<T>::parallel_safe && half >= kParallelPassThreshold;
  const std::size_t chunks = parallel ? configured_threads() : 1;
  if (chunks <= 1) {
    run(0, half);
    return;
  }
  parallel_for(chunks, [&](std::size_t c) { run(half * c / chunks, half * (c + 1) / chunks); });
}

}  // namespace detail

// In-place fast zeta transform over 2^n values: afterwards v[X] = sum of the
// original v[S] over S subset of X. Bits are processed in ascending order; each
// pass does 2^(n-1) additions. With max_rank < n only masks of popcount at most
// max_rank are updated (they depend only on their own submasks).
template <Ring T>
void zeta_in_place(std::span<T> v, int n, int max_rank = -1) {
  if (max_rank < 0 || max_rank >= n) {
    for (int bit = 0; bit < n; ++bit) {
      detail::for_each_pair<T>(n, bit, [&](Mask lo, Mask hi) { v[hi] += v[lo]; });
    }
    return;
  }
  for (int bit = 0; bit < n; ++bit) {
    detail::for_each_pair<T>(n, bit, [&](Mask lo, Mask hi) {
      if (popcount(hi) <= max_rank) v[hi] += v[lo];
    });
  }
}

// Inverse of zeta_in_place.
template <Ring T>
void mobius_in_place(std::span<T> v, int n, int max_rank = -1) {
  if (max_rank < 0 || max_rank >= n) {
    for (int bit = 0; bit < n; ++bit) {
      detail::for_each_pair<T>(n, bit, [&](Mask lo, Mask hi) { v[hi] -= v[lo]; });
    }
    return;
  }
  for (int bit = 0; bit < n; ++bit) {
    detail::for_each_pair<T>(n, bit, [&](Mask lo, Mask hi) {
      if (popcount(hi) <= max_rank) v[hi] -= v[lo];
    });
  }
}

template <Ring T>
SetFunction<T> zeta_transform(SetFunction<T> f) {
  zeta_in_place<T>(f.values(), f.n());
  return f;
}

template <Ring T>
SetFunction<T> mobius_inversion(SetFunction<T> g) {
  mobius_in_place<T>(g.values(), g.n());
  return g;
}

// Table of (r_max + 1) rank slices, each a set function. Stored mask-major:
// the slices for one mask are contiguous.
template <Ring T>
class RankedTable {
public:
  RankedTable(GroundSet ground, int r_max) : ground_(ground), r_max_(r_max) {
    if (r_max < 0 || r_max > 2 * ground.size()) {
      throw InvalidArgument("r_max " + std::to_string(r_max) + " outside [0, " +
                            std::to_string(2 * ground.size()) + "]");
    }
    data_.assign(ground.subset_count() * stride(), ring_zero<T>());
  }

  GroundSet ground() const noexcept { return ground_; }
  int n() const noexcept { return ground_.size(); }
  int r_max() const noexcept { return r_max_; }
  std::size_t stride() const noexcept { return static_cast<std::size_t>(r_max_) + 1; }

  const T& at(int k, Mask x) const { return data_[x * stride() + k]; }
  T& at(int k, Mask x) { return data_[x * stride() + k]; }

  // All ranks for one mask.
  std::span<const T> ranks(Mask x) const { return {data_.data() + x * stride(), stride()}; }
  std::span<T> ranks(Mask x) { return {data_.data() + x * stride(), stride()}; }

  SetFunction<T> slice(int k) const {
    SetFunction<T> out(ground_);
    for (std::size_t x = 0; x < ground_.subset_count(); ++x) out[static_cast<Mask>(x)] = at(k, static_cast<Mask>(x));
    return out;
  }

  friend bool operator==(const RankedTable&, const RankedTable&) = default;

private:
  GroundSet ground_;
  int r_max_;
  std::vector<T> data_;
};

// Slice k at X holds the sum of f(S) over S subset of X with |S| = k.
template <Ring T>
RankedTable<T> ranked_zeta(const SetFunction<T>& f, int r_max) {
  RankedTable<T> table(f.ground(), r_max);
  const int n = f.n();
  for (std::size_t s = 0; s < f.size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    if (popcount(m) <= r_max) table.at(popcount(m), m) = f[m];
  }
  for (int bit = 0; bit < n; ++bit) {
    detail::for_each_pair<T>(n, bit, [&](Mask lo, Mask hi) {
      // Slice k at lo is zero unless k <= |lo|.
      const int top = std::min(r_max, popcount(lo));
      auto dst = table.ranks(hi);
      auto src = table.ranks(lo);
      for (int k = 0; k <= top; ++k) dst[k] += src[k];
    });
  }
  return table;
}

// Möbius-inverts every slice independently. For a table from ranked_zeta(f),
// slice |S| at S is f(S) afterwards.
template <Ring T>
RankedTable<T> ranked_mobius(RankedTable<T> table) {
  const int n = table.n();
  const int r = table.r_max();
  for (int bit = 0; bit < n; ++bit) {
    detail::for_each_pair<T>(n, bit, [&](Mask lo, Mask hi) {
      auto dst = table.ranks(hi);
      auto src = table.ranks(lo);
      for (int k = 0; k <= r; ++k) dst[k] -= src[k];
    });
  }
  return table;
}

// Forward: out(X) = sum over S of (-1)^|X & S| f(S). Inverse divides by 2^n
// exactly and throws InexactDivision on a remainder over integer rings.
template <Ring T>
SetFunction<T> walsh_hadamard(SetFunction<T> f, bool inverse) {
  const int n = f.n();
  auto v = f.values();
  for (int bit = 0; bit < n; ++bit) {
    detail::for_each_pair<T>(n, bit, [&](Mask lo, Mask hi) {
      T diff = v[lo];
      diff -= v[hi];
      v[lo] += v[hi];
      v[hi] = std::move(diff);
    });
  }
  if (inverse && n > 0) {
    for (auto& x : v) RingTraits<T>::exact_div_pow2(x, n);
  }
  return f;
}

}  // namespace subsetconv
