#pragma once

#include <string>

#include "subsetconv/mask.hpp"
#include "subsetconv/optimize.hpp"
#include "subsetconv/products.hpp"
#include "subsetconv/set_function.hpp"

// Literal evaluation of every product's defining sum. Shares no code with the
// transform-based kernels; used as ground truth.
namespace subsetconv::oracle {

inline constexpr int kDefaultMaxN = 14;

inline void check_guard(int n, int max_n) {
  if (n > max_n) {
    throw GuardError("oracle limited to n <= " + std::to_string(max_n) + ", got n=" + std::to_string(n));
  }
}

// Calls visit(u, v) for every pair the mode sums over at s.
template <class Visit>
void for_each_pair(ProductMode mode, GroundSet ground, Mask s, Visit&& visit) {
  switch (mode.kind) {
    case ProductMode::Kind::Subset:
      for (Mask t : submasks(s)) visit(t, s & ~t);
      return;
    case ProductMode::Kind::Cover:
    case ProductMode::Kind::IntersectCover:
    case ProductMode::Kind::ExactIntersection:
      for (Mask u : submasks(s)) {
        for (Mask common : submasks(u)) {
          if (mode.kind == ProductMode::Kind::IntersectCover && common == 0) continue;
          if (mode.kind == ProductMode::Kind::ExactIntersection && popcount(common) != mode.ell) continue;
          visit(u, (s & ~u) | common);
        }
      }
      return;
    case ProductMode::Kind::Pack:
      for (Mask u : submasks(s)) {
        for (Mask v : submasks(s & ~u)) visit(u, v);
      }
      return;
    case ProductMode::Kind::Xor:
      for (std::size_t t = 0; t < ground.subset_count(); ++t) visit(static_cast<Mask>(t), s ^ static_cast<Mask>(t));
      return;
  }
}

template <Ring T>
SetFunction<T> direct_product(const SetFunction<T>& f, const SetFunction<T>& g, ProductMode mode,
                              int max_n = kDefaultMaxN) {
  require_same_ground(f, g);
  check_guard(f.n(), max_n);
  if (mode.kind == ProductMode::Kind::ExactIntersection && (mode.ell < 0 || mode.ell > f.n())) {
    throw InvalidArgument("intersection size out of range");
  }
  SetFunction<T> out(f.ground());
  for (std::size_t s = 0; s < out.size(); ++s) {
    T acc = ring_zero<T>();
    for_each_pair(mode, f.ground(), static_cast<Mask>(s), [&](Mask u, Mask v) { acc += f[u] * g[v]; });
    out[static_cast<Mask>(s)] = std::move(acc);
  }
  return out;
}

ExtendedWeightFunction direct_opt_product(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g,
                                          OptMode mode, ProductMode product, int max_n = kDefaultMaxN);

}  // namespace subsetconv::oracle
