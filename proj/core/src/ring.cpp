#include "subsetconv/ring.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace subsetconv {

namespace {

bool is_integer_text(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_text(text)) throw ParseError("malformed integer '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

std::int64_t parse_int64(std::string_view text) {
  if (!is_integer_text(text)) throw ParseError("malformed integer '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc::result_out_of_range) throw ParseError("integer '" + std::string(text) + "' exceeds 64 bits");
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  return v;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (den_text.starts_with('-') || den_text.starts_with('+')) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  const BigInt den = parse_bigint(den_text);
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

CheckedInt to_checked(const BigInt& x) {
  if (!x.fits_slong_p()) throw GuardError("value " + x.get_str() + " does not fit the 64-bit ring; use --ring big");
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return CheckedInt(x.get_si());
}

std::string to_string(const CheckedInt& x) { return std::to_string(x.value()); }
std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace subsetconv
