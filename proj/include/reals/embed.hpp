#ifndef REALS_EMBED_HPP
#define REALS_EMBED_HPP

// Embeddings: positive rationals into positive cuts (phi), positive cuts
// into reals (f), and signed rationals into reals (g).

#include "reals/real.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace reals {

enum class RationalSign { Neg, Zero, Pos };

/// A signed rational in sign/magnitude form. Zero carries no magnitude.
class SignedRational {
public:
  SignedRational() = default;

  SignedRational(RationalSign sign, PosRational mag)
      : sign_(sign), mag_(std::move(mag)) {
    if (sign == RationalSign::Zero) {
      mag_.reset();
    }
  }

  /// n/d for any integers with d != 0.
  static SignedRational from_integers(BigInt n, BigInt d) {
    if (d == 0) {
      throw std::domain_error("SignedRational: zero denominator");
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      return {};
    }
    if (n < 0) {
      return {RationalSign::Neg, PosRational(-n, d)};
    }
    return {RationalSign::Pos, PosRational(n, d)};
  }

  static SignedRational positive(PosRational r) {
    return {RationalSign::Pos, std::move(r)};
  }

  RationalSign sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == RationalSign::Zero; }

  /// Magnitude; only meaningful when nonzero.
  const PosRational &mag() const { return *mag_; }

  BigInt signed_num() const {
    if (is_zero()) {
      return 0;
    }
    return sign_ == RationalSign::Neg ? BigInt(-mag_->num()) : mag_->num();
  }

  BigInt den() const { return is_zero() ? BigInt(1) : mag_->den(); }

  /// "n/d", "-n/d" or "0/1".
  std::string str() const {
    return signed_num().str() + "/" + den().str();
  }

  friend bool operator==(const SignedRational &a, const SignedRational &b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }

  friend std::strong_ordering operator<=>(const SignedRational &a,
                                          const SignedRational &b) {
    BigInt lhs = a.signed_num() * b.den();
    BigInt rhs = b.signed_num() * a.den();
    if (lhs < rhs) {
      return std::strong_ordering::less;
    }
    if (lhs > rhs) {
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend SignedRational operator+(const SignedRational &a,
                                  const SignedRational &b) {
    return from_integers(a.signed_num() * b.den() + b.signed_num() * a.den(),
                         a.den() * b.den());
  }

  friend SignedRational operator-(const SignedRational &a) {
    if (a.is_zero()) {
      return a;
    }
    return {a.sign_ == RationalSign::Pos ? RationalSign::Neg
                                         : RationalSign::Pos,
            *a.mag_};
  }

  friend SignedRational operator-(const SignedRational &a,
                                  const SignedRational &b) {
    return a + (-b);
  }

  friend SignedRational operator*(const SignedRational &a,
                                  const SignedRational &b) {
    return from_integers(a.signed_num() * b.signed_num(), a.den() * b.den());
  }

  friend std::ostream &operator<<(std::ostream &os, const SignedRational &r) {
    return os << r.str();
  }

private:
  RationalSign sign_ = RationalSign::Zero;
  std::optional<PosRational> mag_;
};

inline SignedRational to_signed(const PosRational &r) {
  return SignedRational::positive(r);
}

/// phi(r) = S_r.
inline Cut phi(const PosRational &r) { return s_r(r); }

/// f(A) = [(A + S_1, S_1)].
inline Real f_embed(const Cut &a) {
  Cut one = s_r(PosRational(1));
  return Real(add(a, one), one);
}

/// g(q): +m -> [(S_{m+1}, S_1)], -m -> [(S_1, S_{m+1})], 0 -> [(S_1, S_1)].
inline Real g_embed(const SignedRational &q) {
  const PosRational one(1);
  switch (q.sign()) {
  case RationalSign::Pos:
    return Real(s_r(q.mag() + one), s_r(one));
  case RationalSign::Neg:
    return Real(s_r(one), s_r(q.mag() + one));
  case RationalSign::Zero:
    break;
  }
  return zero();
}

} // namespace reals

#endif // REALS_EMBED_HPP
