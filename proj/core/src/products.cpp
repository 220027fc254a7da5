#include "subsetconv/products.hpp"

#include <charconv>

namespace subsetconv {

std::string ProductMode::name() const {
  switch (kind) {
    case Kind::Subset:
      return "subset";
    case Kind::Cover:
      return "cover";
    case Kind::Pack:
      return "pack";
    case Kind::IntersectCover:
      return "icover";
    case Kind::ExactIntersection:
      return "exact:" + std::to_string(ell);
    case Kind::Xor:
      return "xor";
  }
  return "?";
}

ProductMode ProductMode::parse(std::string_view text) {
  if (text == "subset") return subset();
  if (text == "cover") return cover();
  if (text == "pack") return pack();
  if (text == "icover") return intersect_cover();
  if (text == "xor") return xor_();
  constexpr std::string_view prefix = "exact:";
  if (text.starts_with(prefix)) {
    std::string_view digits = text.substr(prefix.size());
    int ell = -1;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), ell);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty() && ell >= 0) return exact(ell);
  }
  throw InvalidArgument("unknown product mode '" + std::string(text) + "'");
}

bool pair_in_mode(ProductMode mode, Mask s, Mask u, Mask v) {
  switch (mode.kind) {
    case ProductMode::Kind::Subset:
      return (u | v) == s && (u & v) == 0;
    case ProductMode::Kind::Cover:
      return (u | v) == s;
    case ProductMode::Kind::Pack:
      return (u & ~s) == 0 && (v & ~s) == 0 && (u & v) == 0;
    case ProductMode::Kind::IntersectCover:
      return (u | v) == s && (u & v) != 0;
    case ProductMode::Kind::ExactIntersection:
      return (u | v) == s && popcount(u & v) == mode.ell;
    case ProductMode::Kind::Xor:
      return (u ^ v) == s;
  }
  return false;
}

}  // namespace subsetconv
