#ifndef REALS_APPROX_HPP
#define REALS_APPROX_HPP

// Certified rational intervals and decimal renderings of reals.

#include "reals/embed.hpp"

#include <string>

namespace reals {

/// Closed interval [lo, hi] known to contain a real.
struct SignedInterval {
  SignedRational lo;
  SignedRational hi;

  SignedRational width() const { return hi - lo; }

  bool contains(const SignedRational &v) const { return lo <= v && v <= hi; }
};

/// Interval of width <= 1/n containing x.
inline SignedInterval rational_interval(const Real &x, const BigInt &n) {
  Bracket p = bracket(x.pos(), 2 * n);
  Bracket m = bracket(x.neg(), 2 * n);
  return {to_signed(p.lo) - to_signed(m.hi), to_signed(p.hi) - to_signed(m.lo)};
}

namespace detail {

enum class Rounding { Floor, Ceil, Nearest };

// Integer k with k / 10^digits equal to v rounded as requested. Nearest
// rounds halves away from zero.
inline BigInt scale_round(const SignedRational &v, unsigned digits,
                          Rounding mode) {
  BigInt num = v.signed_num() * pow(BigInt(10), digits);
  const BigInt den = v.den();
  if (mode == Rounding::Nearest) {
    BigInt twice = 2 * num;
    BigInt k = (BigInt(abs(twice)) + den) / (2 * den);
    return num < 0 ? BigInt(-k) : k;
  }
  // cpp_int division truncates toward zero.
  BigInt q = num / den;
  if (q * den != num) {
    if (mode == Rounding::Floor && num < 0) {
      q -= 1;
    } else if (mode == Rounding::Ceil && num > 0) {
      q += 1;
    }
  }
  return q;
}

inline std::string format_fixed(const BigInt &scaled, unsigned digits) {
  std::string sign = scaled < 0 ? "-" : "";
  std::string body = BigInt(abs(scaled)).str();
  if (body.size() <= digits) {
    body.insert(0, digits + 1 - body.size(), '0');
  }
  std::string int_part = body.substr(0, body.size() - digits);
  std::string frac_part = body.substr(body.size() - digits);
  return sign + int_part + "." + frac_part;
}

} // namespace detail

/// Fixed-point rendering with `digits` fractional digits.
///
/// The value is enclosed at width 10^-(digits+2). If both ends round to
/// the same string and the interval excludes zero, that string is
/// returned; otherwise the outward-rounded interval "[lo, hi]".
inline std::string decimal(const Real &x, unsigned digits) {
  if (digits < 1) {
    throw std::invalid_argument("decimal: digits must be >= 1");
  }
  SignedInterval iv = rational_interval(x, pow(BigInt(10), digits + 2));
  const SignedRational zero_value;
  bool straddles_zero = iv.lo <= zero_value && zero_value <= iv.hi;
  if (!straddles_zero) {
    BigInt a = detail::scale_round(iv.lo, digits, detail::Rounding::Nearest);
    BigInt b = detail::scale_round(iv.hi, digits, detail::Rounding::Nearest);
    if (a == b) {
      return detail::format_fixed(a, digits);
    }
  }
  return "[" +
         detail::format_fixed(
             detail::scale_round(iv.lo, digits, detail::Rounding::Floor),
             digits) +
         ", " +
         detail::format_fixed(
             detail::scale_round(iv.hi, digits, detail::Rounding::Ceil),
             digits) +
         "]";
}

} // namespace reals

#endif // REALS_APPROX_HPP
