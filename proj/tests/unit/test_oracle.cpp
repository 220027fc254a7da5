#include <doctest.h>

#include <limits>

#include "support.hpp"

using namespace subsetconv;
using namespace testsupport;

TEST_SUITE("oracle") {

TEST_CASE("direct products on the small example") {
  const auto f = ints(2, {1, 2, 3, 4});
  const std::vector<std::int64_t> raw{1, 2, 3, 4};
  for (auto mode : {ProductMode::subset(), ProductMode::cover(), ProductMode::pack()}) {
    CHECK(values_of(oracle::direct_product(f, f, mode)) == naive_product(raw, raw, 2, mode));
  }
  CHECK(values_of(oracle::direct_product(f, f, ProductMode::subset())) == std::vector<std::int64_t>{1, 4, 6, 20});
  CHECK(values_of(oracle::direct_product(f, f, ProductMode::cover())) == std::vector<std::int64_t>{1, 8, 15, 76});
  CHECK(values_of(oracle::direct_product(f, f, ProductMode::pack())) == std::vector<std::int64_t>{1, 5, 7, 31});
}

TEST_CASE("direct semiring products on the small examples") {
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  const auto a = weights(2, {0, 1, 2, 5});
  CHECK(strings_of(oracle::direct_opt_product(a, a, OptMode::MinSum, ProductMode::subset())) ==
        std::vector<std::string>{"0", "1", "2", "3"});
  const auto b = weights(2, {0, 3, 3, 1});
  CHECK(strings_of(oracle::direct_opt_product(b, b, OptMode::MaxSum, ProductMode::subset())) ==
        std::vector<std::string>{"0", "3", "3", "6"});
  const auto c = weights(2, {inf, 1, 2, inf});
  CHECK(strings_of(oracle::direct_opt_product(c, c, OptMode::MinSum, ProductMode::subset())) ==
        std::vector<std::string>{"inf", "inf", "inf", "3"});
}

TEST_CASE("intersecting cover is cover minus subset") {
  std::mt19937_64 rng(51);
  for (int n = 0; n <= 8; ++n) {
    const auto f = random_ints(n, -50, 50, rng), g = random_ints(n, -50, 50, rng);
    const auto ic = oracle::direct_product(f, g, ProductMode::intersect_cover());
    const auto c = oracle::direct_product(f, g, ProductMode::cover());
    const auto s = oracle::direct_product(f, g, ProductMode::subset());
    for (Mask m = 0; m < f.size(); ++m) CHECK(ic[m] == c[m] - s[m]);
  }
}

TEST_CASE("oracle agrees with the 4^n reference") {
  std::mt19937_64 rng(52);
  for (int n = 0; n <= 5; ++n) {
    for (auto mode : {ProductMode::subset(), ProductMode::cover(), ProductMode::pack(), ProductMode::intersect_cover(),
                      ProductMode::exact(1), ProductMode::xor_()}) {
      if (mode.kind == ProductMode::Kind::ExactIntersection && n < 1) continue;
      const auto f = random_ints(n, -50, 50, rng), g = random_ints(n, -50, 50, rng);
      CHECK(values_of(oracle::direct_product(f, g, mode)) == naive_product(values_of(f), values_of(g), n, mode));
    }
  }
}

TEST_CASE("oracle guard") {
  const SetFunction<CheckedInt> f(GroundSet(15));
  CHECK_THROWS_AS(oracle::direct_product(f, f, ProductMode::subset()), GuardError);
  const auto w = ExtendedWeightFunction::filled(GroundSet(15), ExtendedWeight(0));
  CHECK_THROWS_AS(oracle::direct_opt_product(w, w, OptMode::MinSum, ProductMode::subset()), GuardError);
}

}
