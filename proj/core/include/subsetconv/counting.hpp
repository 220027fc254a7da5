#pragma once

#include <cstdint>
#include <ostream>

#include "subsetconv/ring.hpp"

namespace subsetconv {

struct OpCounter {
  std::uint64_t adds = 0;  // additions, subtractions, negations
  std::uint64_t muls = 0;

  std::uint64_t total() const noexcept { return adds + muls; }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

// Activates an OpCounter for the current thread while alive. Contexts nest;
// the innermost one receives the counts. Operations on Counted<R> values
// with no active context are not recorded.
class CountingContext {
public:
  CountingContext() noexcept : previous_(active_) { active_ = this; }
  ~CountingContext() { active_ = previous_; }
  CountingContext(const CountingContext&) = delete;
  CountingContext& operator=(const CountingContext&) = delete;

  OpCounter snapshot() const noexcept { return counts_; }
  void reset() noexcept { counts_ = {}; }

  static void record_add() noexcept {
    if (active_ != nullptr) ++active_->counts_.adds;
  }
  static void record_mul() noexcept {
    if (active_ != nullptr) ++active_->counts_.muls;
  }

private:
  inline static thread_local CountingContext* active_ = nullptr;
  CountingContext* previous_;
  OpCounter counts_;
};

inline OpCounter counter_snapshot(const CountingContext& ctx) noexcept { return ctx.snapshot(); }

// Ring wrapper that reports every arithmetic operation to the active CountingContext.
template <Ring R>
class Counted {
public:
  Counted() : v_(RingTraits<R>::zero()) {}
  Counted(R v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Counted(long v) : v_(v) {}          // NOLINT(google-explicit-constructor)

  const R& value() const noexcept { return v_; }

  Counted& operator+=(const Counted& o) {
    CountingContext::record_add();
    v_ += o.v_;
    return *this;
  }
  Counted& operator-=(const Counted& o) {
    CountingContext::record_add();
    v_ -= o.v_;
    return *this;
  }
  Counted& operator*=(const Counted& o) {
    CountingContext::record_mul();
    v_ *= o.v_;
    return *this;
  }
  Counted operator-() const {
    CountingContext::record_add();
    R z = RingTraits<R>::zero();
    z -= v_;
    return Counted(std::move(z));
  }

  friend Counted operator+(Counted a, const Counted& b) { return a += b; }
  friend Counted operator-(Counted a, const Counted& b) { return a -= b; }
  friend Counted operator*(Counted a, const Counted& b) { return a *= b; }
  friend bool operator==(const Counted& a, const Counted& b) { return a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Counted& x) { return os << x.v_; }

private:
  R v_;
};

template <Ring R>
struct RingTraits<Counted<R>> {
  static constexpr RingKind kind = RingTraits<R>::kind;
  static constexpr bool integral = RingTraits<R>::integral;
  // The active context is thread-local, so counted work stays on the calling thread.
  static constexpr bool parallel_safe = false;
  static Counted<R> zero() { return Counted<R>(RingTraits<R>::zero()); }
  static Counted<R> one() { return Counted<R>(RingTraits<R>::one()); }
  static bool is_zero(const Counted<R>& x) { return RingTraits<R>::is_zero(x.value()); }
  static void exact_div_pow2(Counted<R>& x, int k) {
    R v = x.value();
    RingTraits<R>::exact_div_pow2(v, k);
    x = Counted<R>(std::move(v));
  }
};

}  // namespace subsetconv
