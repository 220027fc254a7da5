#include "subsetconv/optimize.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace subsetconv {

std::string ExtendedWeight::to_string() const {
  switch (kind_) {
    case Kind::PosInf:
      return "inf";
    case Kind::NegInf:
      return "-inf";
    case Kind::Finite:
      break;
  }
  return std::to_string(value_);
}

ExtendedWeight ExtendedWeight::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return infinity();
  if (text == "-inf") return neg_infinity();
  return ExtendedWeight(parse_int64(text));
}

ExtendedWeight add(const ExtendedWeight& a, const ExtendedWeight& b) {
  if (a.is_finite() && b.is_finite()) {
    std::int64_t sum = 0;
    if (__builtin_add_overflow(a.value(), b.value(), &sum)) throw OverflowError("weight sum overflows 64 bits");
    return sum;
  }
  if (!a.is_finite() && !b.is_finite() && a.kind() != b.kind()) {
    throw InvalidArgument("cannot add +inf and -inf");
  }
  return a.is_finite() ? b : a;
}

bool opt_better(OptMode mode, const ExtendedWeight& a, const ExtendedWeight& b) {
  return mode == OptMode::MinSum ? a < b : b < a;
}

ExtendedWeightFunction::ExtendedWeightFunction(GroundSet ground, std::vector<ExtendedWeight> weights,
                                               std::int64_t bound)
    : ground_(ground), weights_(std::move(weights)), bound_(bound) {
  if (weights_.size() != ground_.subset_count()) {
    throw InvalidArgument("expected " + std::to_string(ground_.subset_count()) + " values, got " +
                          std::to_string(weights_.size()));
  }
  if (bound_ < 0) throw InvalidArgument("weight bound must be nonnegative");
  for (std::size_t s = 0; s < weights_.size(); ++s) {
    const ExtendedWeight& w = weights_[s];
    if (w.is_finite() && (w.value() > bound_ || w.value() < -bound_)) {
      throw InvalidArgument("declared bound " + std::to_string(bound_) + " violated by value " + w.to_string() +
                            " at mask " + std::to_string(s));
    }
  }
}

namespace {

constexpr std::int64_t kMaxEmbeddedBits = std::int64_t{1} << 26;

std::int64_t tight_bound(const std::vector<ExtendedWeight>& weights) {
  std::int64_t m = 0;
  for (const auto& w : weights) {
    if (!w.is_finite()) continue;
    if (w.value() == std::numeric_limits<std::int64_t>::min()) throw OverflowError("weight magnitude overflows");
    m = std::max(m, w.value() < 0 ? -w.value() : w.value());
  }
  return m;
}

struct FiniteRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool any = false;
};

FiniteRange finite_range(const ExtendedWeightFunction& f, OptMode mode) {
  FiniteRange r;
  const ExtendedWeight wrong = -opt_infinity(mode);
  for (const auto& w : f.weights()) {
    if (w == wrong) {
      throw InvalidArgument(std::string("input contains ") + w.to_string() + ", which is not the absorbing element of " +
                            (mode == OptMode::MinSum ? "min-sum" : "max-sum"));
    }
    if (!w.is_finite()) continue;
    if (!r.any) {
      r.lo = r.hi = w.value();
      r.any = true;
    } else {
      r.lo = std::min(r.lo, w.value());
      r.hi = std::max(r.hi, w.value());
    }
  }
  return r;
}

// Smallest b with 2^b strictly above the largest possible pair count at a mask.
int digit_bits_for(ProductMode product, int n) {
  if (product.kind == ProductMode::Kind::Subset) return n + 1;
  BigInt three_n;
  mpz_ui_pow_ui(three_n.get_mpz_t(), 3, static_cast<unsigned long>(n));
  return static_cast<int>(mpz_sizeinbase(three_n.get_mpz_t(), 2));
}

SetFunction<BigInt> embed(const ExtendedWeightFunction& f, std::int64_t offset, int bits) {
  SetFunction<BigInt> out(f.ground());
  for (std::size_t s = 0; s < f.size(); ++s) {
    const ExtendedWeight& w = f[static_cast<Mask>(s)];
    if (!w.is_finite()) continue;  // infinities map to the annihilator
    const auto exponent = static_cast<mp_bitcnt_t>(w.value() - offset) * static_cast<mp_bitcnt_t>(bits);
    mpz_setbit(out[static_cast<Mask>(s)].get_mpz_t(), exponent);
  }
  return out;
}

void require_supported(ProductMode product, int max_rank) {
  switch (product.kind) {
    case ProductMode::Kind::Subset:
    case ProductMode::Kind::IntersectCover:
    case ProductMode::Kind::ExactIntersection:
      if (max_rank >= 0) throw InvalidArgument("rank truncation is supported for the cover product only");
      return;
    case ProductMode::Kind::Cover:
      return;
    case ProductMode::Kind::Pack:
    case ProductMode::Kind::Xor:
      break;
  }
  throw InvalidArgument("semiring product mode " + product.name() + " is not supported");
}

}  // namespace

ExtendedWeightFunction::ExtendedWeightFunction(GroundSet ground, std::vector<ExtendedWeight> weights)
    : ExtendedWeightFunction(ground, weights, tight_bound(weights)) {}

ExtendedWeightFunction ExtendedWeightFunction::filled(GroundSet ground, ExtendedWeight fill) {
  return ExtendedWeightFunction(ground, std::vector<ExtendedWeight>(ground.subset_count(), fill));
}

BigInt EmbeddedProduct::digit(Mask s, std::int64_t r) const {
  if (r < 0 || r > max_digit) return 0;
  BigInt shifted = value[s] >> static_cast<mp_bitcnt_t>(r * digit_bits);
  BigInt out;
  mpz_fdiv_r_2exp(out.get_mpz_t(), shifted.get_mpz_t(), static_cast<mp_bitcnt_t>(digit_bits));
  return out;
}

EmbeddedProduct embedded_product(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g, OptMode mode,
                                 ProductMode product, int max_rank) {
  if (f.ground() != g.ground()) {
    throw InvalidArgument("ground set mismatch: n=" + std::to_string(f.n()) + " vs n=" + std::to_string(g.n()));
  }
  require_supported(product, max_rank);
  if (product.kind == ProductMode::Kind::ExactIntersection && (product.ell < 0 || product.ell > f.n())) {
    throw InvalidArgument("intersection size " + std::to_string(product.ell) + " outside [0, " +
                          std::to_string(f.n()) + "]");
  }
  const FiniteRange rf = finite_range(f, mode);
  const FiniteRange rg = finite_range(g, mode);

  EmbeddedProduct out;
  out.digit_bits = digit_bits_for(product, f.n());
  out.offset = rf.lo + rg.lo;
  out.max_digit = (rf.hi - rf.lo) + (rg.hi - rg.lo);
  if (out.max_digit > kMaxEmbeddedBits / out.digit_bits) {
    throw GuardError("weight range " + std::to_string(out.max_digit) + " too wide for the integer embedding");
  }

  const SetFunction<BigInt> ef = embed(f, rf.lo, out.digit_bits);
  const bool same = &f == &g;
  const SetFunction<BigInt> eg = same ? SetFunction<BigInt>() : embed(g, rg.lo, out.digit_bits);
  const SetFunction<BigInt>& rhs = same ? ef : eg;

  switch (product.kind) {
    case ProductMode::Kind::Subset:
      out.value = subset_convolve(ef, rhs);
      break;
    case ProductMode::Kind::Cover:
      out.value = cover_product(ef, rhs, max_rank);
      break;
    case ProductMode::Kind::IntersectCover:
      out.value = intersect_cover_product(ef, rhs);
      break;
    case ProductMode::Kind::ExactIntersection:
      out.value = exact_intersection_product(ef, rhs, product.ell);
      break;
    default:
      break;
  }
  return out;
}

ExtendedWeightFunction opt_product(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g, OptMode mode,
                                   ProductMode product, int max_rank) {
  const EmbeddedProduct e = embedded_product(f, g, mode, product, max_rank);
  std::vector<ExtendedWeight> out(f.size(), opt_infinity(mode));
  for (std::size_t s = 0; s < out.size(); ++s) {
    const BigInt& x = e.value[static_cast<Mask>(s)];
    const int sign = sgn(x);
    if (sign == 0) continue;
    if (sign < 0) throw std::logic_error("embedded product produced a negative count");
    const mp_bitcnt_t bit = mode == OptMode::MinSum ? mpz_scan1(x.get_mpz_t(), 0)
                                                    : mpz_sizeinbase(x.get_mpz_t(), 2) - 1;
    out[s] = e.offset + static_cast<std::int64_t>(bit / static_cast<mp_bitcnt_t>(e.digit_bits));
  }
  return ExtendedWeightFunction(f.ground(), std::move(out));
}

ExtendedWeightFunction opt_convolve(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g, OptMode mode) {
  return opt_product(f, g, mode, ProductMode::subset());
}

std::optional<std::pair<Mask, Mask>> find_witness(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g,
                                                  ProductMode product, Mask s, const ExtendedWeight& target) {
  if (f.ground() != g.ground()) throw InvalidArgument("ground set mismatch");
  if (!f.ground().contains(s)) throw InvalidArgument("mask outside ground set");
  auto hit = [&](Mask u, Mask v) { return add(f[u], g[v]) == target; };
  for (Mask v : submasks(s)) {
    const Mask rest = s & ~v;
    switch (product.kind) {
      case ProductMode::Kind::Subset:
        if (hit(rest, v)) return std::pair{rest, v};
        break;
      case ProductMode::Kind::Pack:
        for (Mask u : submasks(rest)) {
          if (hit(u, v)) return std::pair{u, v};
        }
        break;
      case ProductMode::Kind::Cover:
      case ProductMode::Kind::IntersectCover:
      case ProductMode::Kind::ExactIntersection:
        for (Mask w : submasks(v)) {
          if (product.kind == ProductMode::Kind::IntersectCover && w == 0) continue;
          if (product.kind == ProductMode::Kind::ExactIntersection && popcount(w) != product.ell) continue;
          if (hit(rest | w, v)) return std::pair{rest | w, v};
        }
        break;
      case ProductMode::Kind::Xor:
        throw InvalidArgument("witness search does not support xor");
    }
  }
  return std::nullopt;
}

std::pair<Mask, Mask> opt_witness(const ExtendedWeightFunction& f, const ExtendedWeightFunction& g, OptMode mode,
                                  ProductMode product, Mask s, const ExtendedWeight& target) {
  if (target == -opt_infinity(mode)) throw InvalidArgument("target " + target.to_string() + " is not attainable");
  auto found = find_witness(f, g, product, s, target);
  if (!found) {
    throw InvalidArgument("no " + product.name() + " pair at mask " + std::to_string(s) + " achieves " +
                          target.to_string());
  }
  return *found;
}

}  // namespace subsetconv
