#include "subsetconv/oracle.hpp"

namespace subsetconv::oracle {

ExtendedWeightFunction direct_opt_product(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g,
                                          OptMode mode, ProductMode product, int max_n) {
  if (f.ground() != g.ground()) throw InvalidArgument("ground set mismatch");
  check_guard(f.n(), max_n);
  std::vector<ExtendedWeight> out(f.size(), opt_infinity(mode));
  for (std::size_t s = 0; s < out.size(); ++s) {
    ExtendedWeight best = opt_infinity(mode);
    for_each_pair(product, f.ground(), static_cast<Mask>(s), [&](Mask u, Mask v) {
      const ExtendedWeight w = add(f[u], g[v]);
      if (opt_better(mode, w, best)) best = w;
    });
    out[s] = best;
  }
  return ExtendedWeightFunction(f.ground(), std::move(out));
}

}  // namespace subsetconv::oracle
