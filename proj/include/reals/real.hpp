#ifndef REALS_REAL_HPP
#define REALS_REAL_HPP

// Signed reals as classes of pairs (A, B) of positive cuts, read as A - B.
// (A, B) and (A', B') name the same real iff A + B' = A' + B.

#include "reals/cut.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace reals {

/// inv could not certify its argument nonzero at the given precision.
class ZeroAtPrecision : public std::runtime_error {
public:
  explicit ZeroAtPrecision(BigInt n)
      : std::runtime_error("value is indistinguishable from zero at 1/" +
                           n.str()),
        precision_(std::move(n)) {}

  const BigInt &precision() const noexcept { return precision_; }

private:
  BigInt precision_;
};

class Real {
public:
  Real(Cut pos, Cut neg) : pos_(std::move(pos)), neg_(std::move(neg)) {}

  const Cut &pos() const noexcept { return pos_; }
  const Cut &neg() const noexcept { return neg_; }

private:
  Cut pos_;
  Cut neg_;
};

enum class Sign { Positive, Negative, IndistinguishableFromZero };

/// Positive and Negative are certificates; IndistinguishableFromZero at
/// precision n only asserts |value| <= 2/n.
struct SignVerdict {
  Sign sign;
  BigInt precision;

  friend bool operator==(const SignVerdict &, const SignVerdict &) = default;
};

struct PositiveForm {
  Cut magnitude;
};
struct ZeroForm {};
struct NegativeForm {
  Cut magnitude;
};
struct Indeterminate {
  BigInt precision;
};

/// Sign-normalised view of a real: S_1 + C - S_1, zero, or S_1 - (S_1 + D).
using CanonicalForm =
    std::variant<PositiveForm, ZeroForm, NegativeForm, Indeterminate>;

inline Real from_pair(Cut a, Cut b) { return Real(std::move(a), std::move(b)); }

/// [(S_1, S_1)], with both components the same node.
inline Real zero() {
  Cut one = s_r(PosRational(1));
  return Real(one, one);
}

/// [(S_1 + S_1, S_1)].
inline Real unity() {
  Cut one = s_r(PosRational(1));
  return Real(add(one, one), one);
}

inline Real add(const Real &x, const Real &y) {
  return Real(add(x.pos(), y.pos()), add(x.neg(), y.neg()));
}

inline Real neg(const Real &x) { return Real(x.neg(), x.pos()); }

inline Real sub(const Real &x, const Real &y) { return add(x, neg(y)); }

/// [(A A' + B B', A B' + B A')].
inline Real mul(const Real &x, const Real &y) {
  return Real(add(mul(x.pos(), y.pos()), mul(x.neg(), y.neg())),
              add(mul(x.pos(), y.neg()), mul(x.neg(), y.pos())));
}

inline Real operator+(const Real &x, const Real &y) { return add(x, y); }
inline Real operator-(const Real &x, const Real &y) { return sub(x, y); }
inline Real operator-(const Real &x) { return neg(x); }
inline Real operator*(const Real &x, const Real &y) { return mul(x, y); }

inline SignVerdict sign(const Real &x, const BigInt &n) {
  switch (compare(x.pos(), x.neg(), n)) {
  case CutOrder::Greater:
    return {Sign::Positive, n};
  case CutOrder::Less:
    return {Sign::Negative, n};
  case CutOrder::Overlap:
    break;
  }
  return {Sign::IndistinguishableFromZero, n};
}

/// x < y iff pos_x + neg_y is strictly inside neg_x + pos_y.
inline CutOrder less_than(const Real &x, const Real &y, const BigInt &n) {
  return compare(add(x.pos(), y.neg()), add(x.neg(), y.pos()), n);
}

inline CanonicalForm canonicalize(const Real &x, const BigInt &n,
                                  const BigInt &budget = kDefaultBudget) {
  if (same_node(x.pos(), x.neg())) {
    return ZeroForm{};
  }
  switch (sign(x, n).sign) {
  case Sign::Positive:
    return PositiveForm{difference(x.neg(), x.pos(), budget)};
  case Sign::Negative:
    return NegativeForm{difference(x.pos(), x.neg(), budget)};
  case Sign::IndistinguishableFromZero:
    break;
  }
  return Indeterminate{n};
}

/// Multiplicative inverse. Requires x to be certified nonzero at 1/n.
inline Real inv(const Real &x, const BigInt &n,
                const BigInt &budget = kDefaultBudget) {
  CanonicalForm form = canonicalize(x, n, budget);
  Cut one = s_r(PosRational(1));
  if (auto *p = std::get_if<PositiveForm>(&form)) {
    return Real(add(one, inverse(p->magnitude)), one);
  }
  if (auto *m = std::get_if<NegativeForm>(&form)) {
    return Real(one, add(one, inverse(m->magnitude)));
  }
  throw ZeroAtPrecision(n);
}

} // namespace reals

#endif // REALS_REAL_HPP
