#include "selftest.hpp"

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "subsetconv/subsetconv.hpp"

namespace subsetconv::cli {

namespace {

SetFunction<CheckedInt> random_ring(GroundSet ground, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> val(-50, 50);
  std::vector<CheckedInt> v(ground.subset_count());
  for (auto& x : v) x = CheckedInt(val(rng));
  return SetFunction<CheckedInt>(ground, std::move(v));
}

ExtendedWeightFunction random_weights(GroundSet ground, std::mt19937_64& rng, OptMode mode) {
  std::uniform_int_distribution<int> val(-8, 8);
  std::bernoulli_distribution inf(0.15);
  std::vector<ExtendedWeight> v(ground.subset_count());
  for (auto& x : v) x = inf(rng) ? opt_infinity(mode) : ExtendedWeight(val(rng));
  return ExtendedWeightFunction(ground, std::move(v));
}

}  // namespace

bool run_selftest(int max_n, std::uint64_t seed, std::ostream& out) {
  oracle::check_guard(max_n, oracle::kDefaultMaxN);
  std::mt19937_64 rng(seed);
  const std::vector<ProductMode> ring_modes{ProductMode::subset(),   ProductMode::cover(),
                                            ProductMode::pack(),     ProductMode::intersect_cover(),
                                            ProductMode::exact(0),   ProductMode::exact(1),
                                            ProductMode::exact(2),   ProductMode::xor_()};
  const std::vector<ProductMode> opt_modes{ProductMode::subset(), ProductMode::cover(), ProductMode::intersect_cover(),
                                           ProductMode::exact(1)};
  bool ok = true;
  int checks = 0;
  for (int n = 0; n <= max_n; ++n) {
    const GroundSet ground(n);
    for (const auto& mode : ring_modes) {
      if (mode.kind == ProductMode::Kind::ExactIntersection && mode.ell > n) continue;
      const auto f = random_ring(ground, rng);
      const auto g = random_ring(ground, rng);
      const bool same = product(f, g, mode) == oracle::direct_product(f, g, mode);
      out << (same ? "ok   " : "FAIL ") << mode.name() << " n=" << n << '\n';
      ok = ok && same;
      ++checks;
    }
    for (OptMode om : {OptMode::MinSum, OptMode::MaxSum}) {
      for (const auto& mode : opt_modes) {
        if (mode.kind == ProductMode::Kind::ExactIntersection && mode.ell > n) continue;
        const auto f = random_weights(ground, rng, om);
        const auto g = random_weights(ground, rng, om);
        const bool same = opt_product(f, g, om, mode) == oracle::direct_opt_product(f, g, om, mode);
        out << (same ? "ok   " : "FAIL ") << (om == OptMode::MinSum ? "min-" : "max-") << mode.name() << " n=" << n
            << '\n';
        ok = ok && same;
        ++checks;
      }
    }
  }
  out << (ok ? "selftest passed " : "selftest FAILED ") << checks << " checks\n";
  return ok;
}

}  // namespace subsetconv::cli
