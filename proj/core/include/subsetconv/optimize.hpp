#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subsetconv/mask.hpp"
#include "subsetconv/products.hpp"
#include "subsetconv/ring.hpp"
#include "subsetconv/set_function.hpp"

namespace subsetconv {

// Integer weight or an infinity. Only the infinity matching the OptMode is
// meaningful: +inf for MinSum, -inf for MaxSum.
class ExtendedWeight {
public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtendedWeight() = default;
  constexpr ExtendedWeight(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedWeight infinity() { return ExtendedWeight(Kind::PosInf); }
  static constexpr ExtendedWeight neg_infinity() { return ExtendedWeight(Kind::NegInf); }

  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr Kind kind() const noexcept { return kind_; }
  // Undefined for infinities; check is_finite() first.
  constexpr std::int64_t value() const noexcept { return value_; }

  constexpr ExtendedWeight operator-() const noexcept {
    switch (kind_) {
      case Kind::PosInf:
        return neg_infinity();
      case Kind::NegInf:
        return infinity();
      case Kind::Finite:
        break;
    }
    return ExtendedWeight(-value_);
  }

  friend constexpr bool operator==(const ExtendedWeight& a, const ExtendedWeight& b) noexcept {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedWeight& a, const ExtendedWeight& b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  // "inf", "-inf" or the decimal value.
  std::string to_string() const;
  static ExtendedWeight parse(std::string_view text);

private:
  constexpr explicit ExtendedWeight(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

// Sum with infinities absorbing. Mixing +inf and -inf is rejected.
ExtendedWeight add(const ExtendedWeight& a, const ExtendedWeight& b);

// Dense table of extended weights with a declared magnitude bound M:
// every finite entry lies in [-M, M].
class ExtendedWeightFunction {
public:
  ExtendedWeightFunction() : weights_(1, ExtendedWeight::infinity()) {}
  ExtendedWeightFunction(GroundSet ground, std::vector<ExtendedWeight> weights, std::int64_t bound);
  // Bound taken as the largest finite magnitude present.
  ExtendedWeightFunction(GroundSet ground, std::vector<ExtendedWeight> weights);
  // Every entry set to `fill`.
  static ExtendedWeightFunction filled(GroundSet ground, ExtendedWeight fill);

  GroundSet ground() const noexcept { return ground_; }
  int n() const noexcept { return ground_.size(); }
  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t bound() const noexcept { return bound_; }

  const ExtendedWeight& operator[](Mask s) const { return weights_[s]; }
  const std::vector<ExtendedWeight>& weights() const noexcept { return weights_; }

  friend bool operator==(const ExtendedWeightFunction& a, const ExtendedWeightFunction& b) {
    return a.ground_ == b.ground_ && a.weights_ == b.weights_;
  }

private:
  GroundSet ground_;
  std::vector<ExtendedWeight> weights_;
  std::int64_t bound_ = 0;
};

enum class OptMode { MinSum, MaxSum };

// The absorbing infinity of the mode.
inline ExtendedWeight opt_infinity(OptMode mode) {
  return mode == OptMode::MinSum ? ExtendedWeight::infinity() : ExtendedWeight::neg_infinity();
}

// True when a is strictly better than b under the mode.
bool opt_better(OptMode mode, const ExtendedWeight& a, const ExtendedWeight& b);

// Integer polynomial image of a semiring product: at every S,
//   value(S) = sum over contributing pairs (U, V) of B^(f'(U) + g'(V))
// where f' = f - offset_f, g' = g - offset_g over the finite entries and
// B = 2^digit_bits. Each digit counts the pairs achieving that shifted sum.
struct EmbeddedProduct {
  int digit_bits = 0;
  std::int64_t offset = 0;  // offset_f + offset_g
  std::int64_t max_digit = 0;
  SetFunction<BigInt> value;

  // Number of pairs with f(U) + g(V) = offset + r. Experimental: only the
  // extreme nonzero digit is used by the solvers.
  BigInt digit(Mask s, std::int64_t r) const;
};

EmbeddedProduct embedded_product(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g, OptMode mode,
                                 ProductMode product, int max_rank = -1);

// opt over the product's pair set of f(U) + g(V). Supported products: Subset,
// Cover, IntersectCover, ExactIntersection. With max_rank >= 0 (Cover only)
// masks above that popcount are left infinite.
ExtendedWeightFunction opt_product(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g, OptMode mode,
                                   ProductMode product, int max_rank = -1);

// opt over T subset of S of f(T) + g(S \ T).
ExtendedWeightFunction opt_convolve(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g, OptMode mode);

// First pair (U, V) of the product's pair set at s with f(U) + g(V) == target.
// V runs over the submasks of s in decreasing order; for each V, U runs over
// the admissible completions in decreasing order.
std::optional<std::pair<Mask, Mask>> find_witness(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g,
                                                  ProductMode product, Mask s, const ExtendedWeight& target);

// As find_witness, but throws InvalidArgument when no pair achieves target.
std::pair<Mask, Mask> opt_witness(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g, OptMode mode,
                                  ProductMode product, Mask s, const ExtendedWeight& target);

}  // namespace subsetconv
