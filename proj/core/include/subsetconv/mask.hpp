#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "subsetconv/error.hpp"

namespace subsetconv {

// Subset of the ground set: element i (1-based) is bit i-1.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 28;

inline int popcount(Mask s) noexcept { return std::popcount(s); }

class GroundSet {
public:
  constexpr GroundSet() = default;
  explicit GroundSet(int n) : n_(n) {
    if (n < 0 || n > kMaxGroundSize) {
      throw GuardError("ground set size " + std::to_string(n) + " outside [0, " +
                       std::to_string(kMaxGroundSize) + "]");
    }
  }

  constexpr int size() const noexcept { return n_; }
  constexpr std::size_t subset_count() const noexcept { return std::size_t{1} << n_; }
  constexpr Mask full() const noexcept { return static_cast<Mask>(subset_count() - 1); }
  constexpr bool contains(Mask s) const noexcept { return s <= full(); }

  friend constexpr bool operator==(GroundSet, GroundSet) = default;

private:
  int n_ = 0;
};

// Submasks of a mask in strictly decreasing numeric order, from the mask itself down to 0.
class Submasks {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Mask;
    using difference_type = std::ptrdiff_t;
    using pointer = const Mask*;
    using reference = Mask;

    iterator() = default;
    iterator(Mask set, Mask cur, bool done) : set_(set), cur_(cur), done_(done) {}

    Mask operator*() const noexcept { return cur_; }
    iterator& operator++() noexcept {
      if (cur_ == 0) {
        done_ = true;
      } else {
        cur_ = (cur_ - 1) & set_;
      }
      return *this;
    }
    iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.done_ == b.done_ && (a.done_ || a.cur_ == b.cur_);
    }

  private:
    Mask set_ = 0;
    Mask cur_ = 0;
    bool done_ = true;
  };

  explicit Submasks(Mask set) noexcept : set_(set) {}
  iterator begin() const noexcept { return {set_, set_, false}; }
  iterator end() const noexcept { return {set_, 0, true}; }

private:
  Mask set_;
};

inline Submasks submasks(Mask s) noexcept { return Submasks(s); }

inline std::vector<Mask> iterate_subsets(Mask s) {
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << popcount(s));
  for (Mask t : submasks(s)) out.push_back(t);
  return out;
}

// Mask of 1-based elements, e.g. {1, 3} -> 0b101.
inline Mask mask_of(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) m |= Mask{1} << (e - 1);
  return m;
}

}  // namespace subsetconv
