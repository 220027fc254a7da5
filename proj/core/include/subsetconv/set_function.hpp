#pragma once

#include <span>
#include <string>
#include <vector>

#include "subsetconv/mask.hpp"
#include "subsetconv/ring.hpp"

namespace subsetconv {

// Dense table f(S) for every subset S of the ground set, indexed by mask.
template <Ring T>
class SetFunction {
public:
  SetFunction() : values_(1, ring_zero<T>()) {}
  explicit SetFunction(GroundSet ground) : ground_(ground), values_(ground.subset_count(), ring_zero<T>()) {}
  SetFunction(GroundSet ground, std::vector<T> values) : ground_(ground), values_(std::move(values)) {
    if (values_.size() != ground_.subset_count()) {
      throw InvalidArgument("expected " + std::to_string(ground_.subset_count()) + " values, got " +
                            std::to_string(values_.size()));
    }
  }

  GroundSet ground() const noexcept { return ground_; }
  int n() const noexcept { return ground_.size(); }
  std::size_t size() const noexcept { return values_.size(); }

  const T& operator[](Mask s) const { return values_[s]; }
  T& operator[](Mask s) { return values_[s]; }

  std::span<const T> values() const noexcept { return values_; }
  std::span<T> values() noexcept { return values_; }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

private:
  GroundSet ground_;
  std::vector<T> values_;
};

template <Ring T>
SetFunction<T> make_set_function(GroundSet ground, std::span<const T> values) {
  return SetFunction<T>(ground, std::vector<T>(values.begin(), values.end()));
}

template <Ring T>
SetFunction<T> make_set_function(GroundSet ground, std::initializer_list<T> values) {
  return SetFunction<T>(ground, std::vector<T>(values));
}

// Same values, converted element-wise (e.g. CheckedInt -> BigInt).
template <Ring To, Ring From, class Convert>
SetFunction<To> map_values(const SetFunction<From>& f, Convert convert) {
  std::vector<To> out;
  out.reserve(f.size());
  for (const From& v : f.values()) out.push_back(convert(v));
  return SetFunction<To>(f.ground(), std::move(out));
}

template <Ring T>
void require_same_ground(const SetFunction<T>& f, const SetFunction<T>& g) {
  if (f.ground() != g.ground()) {
    throw InvalidArgument("ground set mismatch: n=" + std::to_string(f.n()) + " vs n=" +
                          std::to_string(g.n()));
  }
}

}  // namespace subsetconv
