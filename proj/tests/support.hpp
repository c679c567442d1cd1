#ifndef REALS_TESTS_SUPPORT_HPP
#define REALS_TESTS_SUPPORT_HPP

// Random generators and independent oracles shared by the test suites.
// Nothing here calls into the bracket machinery.

#include "reals/embed.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace reals::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng &rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Positive rational with numerator and denominator in [1, limit].
inline PosRational random_pos(Rng &rng, std::int64_t limit = 12) {
  return PosRational(uniform(rng, 1, limit), uniform(rng, 1, limit));
}

inline SignedRational random_signed(Rng &rng, std::int64_t limit = 9) {
  std::int64_t n = uniform(rng, -limit, limit);
  return SignedRational::from_integers(n, uniform(rng, 1, limit));
}

/// A leaf cut together with a predicate giving its exact membership.
struct Leaf {
  Cut cut;
  std::function<bool(const PosRational &)> member;
  // Exact value when the leaf is rational.
  std::optional<PosRational> value;
};

inline Leaf random_leaf(Rng &rng) {
  PosRational r = random_pos(rng);
  switch (uniform(rng, 0, 2)) {
  case 0:
    return {s_r(r), [r](const PosRational &x) { return x < r; }, r};
  case 1: {
    unsigned k = static_cast<unsigned>(uniform(rng, 2, 4));
    return {root_cut(k, r),
            [k, r](const PosRational &x) {
              return pow(x.num(), k) * r.den() < pow(x.den(), k) * r.num();
            },
            std::nullopt};
  }
  default: {
    // { x : x^2 < 3 r^2 } through the oracle extension point.
    auto member = [r](const PosRational &x) {
      return x.num() * x.num() * r.den() * r.den() <
             3 * r.num() * r.num() * x.den() * x.den();
    };
    return {oracle_cut(member, r, r * PosRational(2)), member, std::nullopt};
  }
  }
}

/// floor(sqrt(v)) by integer bisection.
inline BigInt isqrt_floor(const BigInt &v) {
  BigInt lo = 0;
  BigInt hi = 1;
  while (hi * hi <= v) {
    hi *= 2;
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (mid * mid <= v) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// floor(r * 10^digits) for a positive rational.
inline BigInt scaled_floor(const PosRational &r, unsigned digits) {
  return r.num() * pow(BigInt(10), digits) / r.den();
}

} // namespace reals::testing

#endif // REALS_TESTS_SUPPORT_HPP
