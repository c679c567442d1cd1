#ifndef REALS_QPOS_HPP
#define REALS_QPOS_HPP

// Exact arithmetic on the strictly positive rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace reals {

/// Arbitrary-precision integer used for numerators, denominators and
/// precisions throughout the library.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when a value outside the positive rationals is requested.
class NonPositive : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised by sub_strict when the minuend does not exceed the subtrahend.
class NotGreater : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised by mediant when its arguments are not strictly increasing.
class NotLess : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A strictly positive rational num/den, always stored in lowest terms.
///
/// Two PosRational values are equal iff their stored numerators and
/// denominators are equal. Values are immutable once built.
class PosRational {
public:
  /// Builds n/d reduced; throws NonPositive unless n >= 1 and d >= 1.
  PosRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (num_ <= 0 || den_ <= 0) {
      throw NonPositive("positive rational requires num >= 1 and den >= 1");
    }
    reduce();
  }

  explicit PosRational(BigInt n) : PosRational(std::move(n), BigInt(1)) {}

  const BigInt &num() const noexcept { return num_; }
  const BigInt &den() const noexcept { return den_; }

  std::string str() const { return num_.str() + "/" + den_.str(); }

  /// Parses the textual form "n/d" or "n" (decimal digits only, no sign).
  static PosRational parse(std::string_view text) {
    auto digits = [](std::string_view s) {
      if (s.empty()) {
        throw std::invalid_argument("empty integer in rational literal");
      }
      for (char c : s) {
        if (c < '0' || c > '9') {
          throw std::invalid_argument("bad digit in rational literal");
        }
      }
      return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return PosRational(digits(text));
    }
    return PosRational(digits(text.substr(0, slash)),
                       digits(text.substr(slash + 1)));
  }

  friend bool operator==(const PosRational &a, const PosRational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const PosRational &a,
                                          const PosRational &b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) {
      return std::strong_ordering::less;
    }
    if (lhs > rhs) {
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend PosRational operator+(const PosRational &a, const PosRational &b) {
    return PosRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend PosRational operator*(const PosRational &a, const PosRational &b) {
    return PosRational(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend PosRational operator/(const PosRational &a, const PosRational &b) {
    return PosRational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend std::ostream &operator<<(std::ostream &os, const PosRational &r) {
    return os << r.str();
  }

private:
  struct Unchecked {};
  PosRational(Unchecked, BigInt n, BigInt d)
      : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;

  friend PosRational reciprocal(const PosRational &r);
};

enum class Ordering { LT, EQ, GT };

inline PosRational make(const BigInt &n, const BigInt &d) {
  return PosRational(n, d);
}

inline PosRational add(const PosRational &a, const PosRational &b) {
  return a + b;
}
inline PosRational mul(const PosRational &a, const PosRational &b) {
  return a * b;
}
inline PosRational div(const PosRational &a, const PosRational &b) {
  return a / b;
}

/// a - b; only defined when a > b.
inline PosRational sub_strict(const PosRational &a, const PosRational &b) {
  BigInt n = a.num() * b.den() - b.num() * a.den();
  if (n <= 0) {
    throw NotGreater("sub_strict: " + a.str() + " is not greater than " +
                     b.str());
  }
  return PosRational(std::move(n), a.den() * b.den());
}

inline Ordering compare(const PosRational &a, const PosRational &b) {
  auto c = a <=> b;
  if (c < 0) {
    return Ordering::LT;
  }
  return c > 0 ? Ordering::GT : Ordering::EQ;
}

inline PosRational reciprocal(const PosRational &r) {
  return PosRational(PosRational::Unchecked{}, r.den_, r.num_);
}

inline PosRational min(const PosRational &a, const PosRational &b) {
  return b < a ? b : a;
}
inline PosRational max(const PosRational &a, const PosRational &b) {
  return a < b ? b : a;
}

/// The mediant (a+c)/(b+d) of a/b < c/d, taken on the reduced forms.
/// Lies strictly between its arguments.
inline PosRational mediant(const PosRational &a, const PosRational &b) {
  if (!(a < b)) {
    throw NotLess("mediant: " + a.str() + " is not less than " + b.str());
  }
  return PosRational(a.num() + b.num(), a.den() + b.den());
}

/// A natural number exceeding r. Returns num(r) + 1, since
/// num*den + den > num gives num + 1 > num/den.
inline BigInt archimedean_bound(const PosRational &r) { return r.num() + 1; }

/// Smallest integer >= r.
inline BigInt ceil(const PosRational &r) {
  BigInt q = r.num() / r.den();
  return q * r.den() == r.num() ? q : q + 1;
}

/// Integer power by repeated squaring.
inline BigInt pow(BigInt base, unsigned exp) {
  BigInt result = 1;
  while (exp != 0) {
    if (exp & 1U) {
      result *= base;
    }
    exp >>= 1U;
    if (exp != 0) {
      base *= base;
    }
  }
  return result;
}

} // namespace reals

#endif // REALS_QPOS_HPP
