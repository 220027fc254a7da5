#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "subsetconv/error.hpp"

namespace subsetconv {

enum class RingKind { CheckedWord, BigInt, Rational };

// Signed 64-bit integer whose arithmetic throws OverflowError instead of wrapping.
class CheckedInt {
public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const noexcept { return v_; }

  CheckedInt& operator+=(CheckedInt o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) overflow("addition");
    return *this;
  }
  CheckedInt& operator-=(CheckedInt o) {
    if (__builtin_sub_overflow(v_, o.v_, &v_)) overflow("subtraction");
    return *this;
  }
  CheckedInt& operator*=(CheckedInt o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) overflow("multiplication");
    return *this;
  }
  CheckedInt operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) overflow("negation");
    return CheckedInt(-v_);
  }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) { return a += b; }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) { return a -= b; }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) { return a *= b; }

  friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt x) { return os << x.v_; }

private:
  [[noreturn]] static void overflow(const char* op) {
    throw OverflowError(std::string("64-bit overflow in ") + op);
  }

  std::int64_t v_ = 0;
};

using BigInt = mpz_class;
using Rational = mpq_class;

template <class T>
struct RingTraits;

template <>
struct RingTraits<CheckedInt> {
  static constexpr RingKind kind = RingKind::CheckedWord;
  static constexpr bool integral = true;
  static constexpr bool parallel_safe = true;
  static CheckedInt zero() { return 0; }
  static CheckedInt one() { return 1; }
  static bool is_zero(const CheckedInt& x) { return x.value() == 0; }
  static void exact_div_pow2(CheckedInt& x, int k) {
    std::int64_t v = x.value();
    std::int64_t low = v & ((std::int64_t{1} << k) - 1);
    if (low != 0) throw InexactDivision("value not divisible by 2^" + std::to_string(k));
    x = CheckedInt(v / (std::int64_t{1} << k));
  }
};

template <>
struct RingTraits<BigInt> {
  static constexpr RingKind kind = RingKind::BigInt;
  static constexpr bool integral = true;
  static constexpr bool parallel_safe = true;
  static BigInt zero() { return 0; }
  static BigInt one() { return 1; }
  static bool is_zero(const BigInt& x) { return sgn(x) == 0; }
  static void exact_div_pow2(BigInt& x, int k) {
    if (mpz_divisible_2exp_p(x.get_mpz_t(), static_cast<mp_bitcnt_t>(k)) == 0) {
      throw InexactDivision("value not divisible by 2^" + std::to_string(k));
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), BigInt(BigInt(1) << k).get_mpz_t());
  }
};

template <>
struct RingTraits<Rational> {
  static constexpr RingKind kind = RingKind::Rational;
  static constexpr bool integral = false;
  static constexpr bool parallel_safe = true;
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static void exact_div_pow2(Rational& x, int k) {
    mpq_div_2exp(x.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  }
};

// Exact ring usable by the transforms and products. Commutativity is not assumed.
template <class T>
concept Ring = std::copyable<T> && std::equality_comparable<T> && requires(T a, const T& b) {
  { RingTraits<T>::zero() } -> std::convertible_to<T>;
  { RingTraits<T>::one() } -> std::convertible_to<T>;
  { RingTraits<T>::is_zero(b) } -> std::convertible_to<bool>;
  RingTraits<T>::exact_div_pow2(a, 1);
  a += b;
  a -= b;
  a *= b;
};

template <Ring T>
T ring_zero() {
  return RingTraits<T>::zero();
}

template <Ring T>
T ring_one() {
  return RingTraits<T>::one();
}

// Parses a canonical rational "p/q" or integer "p". Throws ParseError.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);
std::int64_t parse_int64(std::string_view text);

// Throws GuardError when x does not fit in 64 bits.
CheckedInt to_checked(const BigInt& x);

std::string to_string(const CheckedInt& x);
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

}  // namespace subsetconv
