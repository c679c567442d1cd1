#ifndef REALS_CUT_HPP
#define REALS_CUT_HPP

// Positive reals as initial segments of the positive rationals.
//
// A Cut is an immutable expression tree. Leaves (rational, k-th root,
// caller-supplied oracle) decide membership exactly; composite nodes
// (sum, product, inverse, difference, finite supremum) are only ever
// observed through brackets: a member lo and a nonmember hi with
// hi - lo <= 1/n.

#include "reals/qpos.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace reals {

class NotALeaf : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotAMember : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class BadDegree : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class EmptyFamily : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A difference node could not certify that its subtrahend lies strictly
/// below its minuend within the refinement budget.
class PrecisionBudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Default cap on how far a separation search may multiply the requested
/// precision before giving up (2^64).
inline const BigInt kDefaultBudget = BigInt(1) << 64;

enum class Membership { In, Out };

/// Result of a precision-qualified comparison. Overlap is an honest
/// "undecided at this precision", never a claim of equality.
enum class CutOrder { Less, Greater, Overlap };

/// A certified pair: lo is a member, hi is not, lo < hi.
struct Bracket {
  PosRational lo;
  PosRational hi;

  PosRational width() const { return sub_strict(hi, lo); }

  /// hi - lo <= 1/n, decided in integers.
  bool width_at_most(const BigInt &n) const {
    BigInt diff = hi.num() * lo.den() - lo.num() * hi.den();
    return diff * n <= hi.den() * lo.den();
  }

  friend bool operator==(const Bracket &, const Bracket &) = default;
};

/// True iff the closed intervals [a.lo, a.hi] and [b.lo, b.hi] intersect.
inline bool overlaps(const Bracket &a, const Bracket &b) {
  return !(a.hi < b.lo) && !(b.hi < a.lo);
}

/// True iff lo < v <= hi, i.e. the bracket is consistent with the cut S_v.
inline bool straddles(const Bracket &b, const PosRational &v) {
  return b.lo < v && v <= b.hi;
}

namespace detail {
struct Node;
}

class Cut {
public:
  explicit Cut(std::shared_ptr<const detail::Node> node)
      : node_(std::move(node)) {}

  const detail::Node &node() const { return *node_; }

  /// Identity of the underlying expression node (not value equality).
  friend bool same_node(const Cut &a, const Cut &b) {
    return a.node_ == b.node_;
  }

private:
  std::shared_ptr<const detail::Node> node_;
};

namespace detail {

using MemberFn = std::function<bool(const PosRational &)>;

struct RationalLeaf {
  PosRational r;
};

struct RootLeaf {
  unsigned degree;
  PosRational radicand;
};

struct OracleLeaf {
  MemberFn member;
};

struct SumNode {
  Cut a;
  Cut b;
};

struct ProductNode {
  Cut a;
  Cut b;
};

struct InverseNode {
  Cut a;
};

struct DifferenceNode {
  Cut lower;
  Cut upper;
  BigInt budget;
};

struct SupNode {
  std::vector<Cut> members;
};

using Kind = std::variant<RationalLeaf, RootLeaf, OracleLeaf, SumNode,
                          ProductNode, InverseNode, DifferenceNode, SupNode>;

struct Witnesses {
  PosRational in;
  PosRational out;
};

struct Node {
  Node(Kind k, std::optional<Witnesses> w)
      : kind(std::move(k)), witnesses(std::move(w)) {}

  Kind kind;
  // Present exactly for leaves.
  std::optional<Witnesses> witnesses;

  // Brackets are a pure function of (node, n); the cache only saves work.
  mutable std::mutex memo_mutex;
  mutable std::map<BigInt, Bracket> memo;
};

template <class... Fs> struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs> Overloaded(Fs...) -> Overloaded<Fs...>;

inline bool root_member(const RootLeaf &leaf, const PosRational &x) {
  return pow(x.num(), leaf.degree) * leaf.radicand.den() <
         pow(x.den(), leaf.degree) * leaf.radicand.num();
}

inline bool leaf_member(const Node &node, const PosRational &x) {
  return std::visit(
      Overloaded{
          [&](const RationalLeaf &l) { return x < l.r; },
          [&](const RootLeaf &l) { return root_member(l, x); },
          [&](const OracleLeaf &l) { return l.member(x); },
          [&](const auto &) -> bool {
            throw NotALeaf("membership is only decidable on leaf cuts");
          },
      },
      node.kind);
}

inline Cut make_node(Kind kind, std::optional<Witnesses> w = std::nullopt) {
  return Cut(std::make_shared<const Node>(std::move(kind), std::move(w)));
}

inline const PosRational &one() {
  static const PosRational value(1);
  return value;
}

inline PosRational half(const PosRational &x) {
  return x * PosRational(1, 2);
}

inline PosRational midpoint(const PosRational &a, const PosRational &b) {
  return half(a + b);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Constructors

/// S_r = { x : x < r }.
inline Cut s_r(const PosRational &r) {
  return detail::make_node(detail::RationalLeaf{r},
                           detail::Witnesses{detail::half(r), r});
}

/// { x : x^k < r } for k >= 2.
inline Cut root_cut(unsigned k, const PosRational &r) {
  if (k < 2) {
    throw BadDegree("root_cut requires degree >= 2; use s_r for degree 1");
  }
  detail::RootLeaf leaf{k, r};
  PosRational in = detail::half(min(detail::one(), r));
  while (!detail::root_member(leaf, in)) {
    in = detail::half(in);
  }
  PosRational out(r.num() + 1);
  while (detail::root_member(leaf, out)) {
    out = out * PosRational(2);
  }
  return detail::make_node(std::move(leaf),
                           detail::Witnesses{std::move(in), std::move(out)});
}

/// A caller-defined leaf. The predicate must describe a nonempty, proper,
/// downward closed subset with no maximum; only the witnesses are checked.
inline Cut oracle_cut(detail::MemberFn member, const PosRational &witness_in,
                      const PosRational &witness_out) {
  if (!member(witness_in)) {
    throw std::invalid_argument("oracle_cut: witness_in is not a member");
  }
  if (member(witness_out)) {
    throw std::invalid_argument("oracle_cut: witness_out is a member");
  }
  return detail::make_node(detail::OracleLeaf{std::move(member)},
                           detail::Witnesses{witness_in, witness_out});
}

/// { x + x' : x in a, x' in b }.
inline Cut add(const Cut &a, const Cut &b) {
  return detail::make_node(detail::SumNode{a, b});
}

/// { x x' : x in a, x' in b }.
inline Cut mul(const Cut &a, const Cut &b) {
  return detail::make_node(detail::ProductNode{a, b});
}

/// { x : x < 1/y for some y not in a }, the multiplicative inverse.
inline Cut inverse(const Cut &a) {
  return detail::make_node(detail::InverseNode{a});
}

/// The unique c with lower + c = upper. Requires lower strictly below
/// upper; bracketing certifies this by separation or throws
/// PrecisionBudgetExhausted after `budget`-fold precision growth.
inline Cut difference(const Cut &lower, const Cut &upper,
                      const BigInt &budget = kDefaultBudget) {
  if (budget < 1) {
    throw std::invalid_argument("difference: budget must be positive");
  }
  return detail::make_node(detail::DifferenceNode{lower, upper, budget});
}

/// Union of a nonempty finite family of cuts.
inline Cut sup_finite(std::vector<Cut> family) {
  if (family.empty()) {
    throw EmptyFamily("sup_finite requires at least one cut");
  }
  return detail::make_node(detail::SupNode{std::move(family)});
}

// ---------------------------------------------------------------------------
// Leaf queries

inline bool is_leaf(const Cut &a) { return a.node().witnesses.has_value(); }

inline Membership membership_leaf(const Cut &a, const PosRational &x) {
  return detail::leaf_member(a.node(), x) ? Membership::In : Membership::Out;
}

namespace detail {

// Smallest n >= n_min with (n*a + c)/(n*b + d) a member, where a/b = x is
// a member and c/d a nonmember. The sequence decreases towards x as n
// grows, so membership is monotone in n.
inline PosRational first_member_on_mediant_ray(const Node &node,
                                               const PosRational &x,
                                               const PosRational &upper,
                                               BigInt n_min) {
  auto term = [&](const BigInt &n) {
    return PosRational(n * x.num() + upper.num(), n * x.den() + upper.den());
  };
  if (leaf_member(node, term(n_min))) {
    return term(n_min);
  }
  BigInt lo = n_min; // not a member
  BigInt hi = n_min * 2;
  while (!leaf_member(node, term(hi))) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (leaf_member(node, term(mid))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return term(hi);
}

// Smallest integer c with c not in the root cut.
inline BigInt first_integer_outside(const RootLeaf &leaf) {
  BigInt lo = 0;
  BigInt hi = leaf.radicand.num() + 1;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (root_member(leaf, PosRational(mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

} // namespace detail

/// Some member of the leaf cut `a` strictly above the member x.
///
/// Root cuts follow the mediant sequence (n a + c)/(n b + 1) towards the
/// least integer c outside the cut, with n >= 3, after first trying 1 when
/// x < 1. Rational leaves return the mediant of x and r.
inline PosRational next_member_above(const Cut &a, const PosRational &x) {
  const detail::Node &node = a.node();
  if (!detail::leaf_member(node, x)) {
    throw NotAMember("next_member_above: " + x.str() + " is not a member");
  }
  return std::visit(
      detail::Overloaded{
          [&](const detail::RationalLeaf &l) { return mediant(x, l.r); },
          [&](const detail::RootLeaf &l) {
            if (x < detail::one() && detail::root_member(l, detail::one())) {
              return detail::one();
            }
            PosRational c(detail::first_integer_outside(l));
            return detail::first_member_on_mediant_ray(node, x, c, 3);
          },
          [&](const detail::OracleLeaf &) {
            return detail::first_member_on_mediant_ray(
                node, x, node.witnesses->out, 1);
          },
          [&](const auto &) -> PosRational {
            throw NotALeaf("next_member_above is only defined on leaf cuts");
          },
      },
      node.kind);
}

// ---------------------------------------------------------------------------
// Brackets

inline Bracket bracket(const Cut &a, const BigInt &n);

namespace detail {

inline Bracket bisect_leaf(const Node &node, const BigInt &n) {
  Bracket b{node.witnesses->in, node.witnesses->out};
  while (!b.width_at_most(n)) {
    PosRational mid = midpoint(b.lo, b.hi);
    if (leaf_member(node, mid)) {
      b.lo = std::move(mid);
    } else {
      b.hi = std::move(mid);
    }
  }
  return b;
}

inline Bracket bracket_sum(const SumNode &s, const BigInt &n) {
  Bracket x = bracket(s.a, 2 * n);
  Bracket y = bracket(s.b, 2 * n);
  return {x.lo + y.lo, x.hi + y.hi};
}

// hi*hi' - lo*lo' = hi (hi' - lo') + lo' (hi - lo). After refining to 1/N
// the refined hi stays below the coarse hi + 1 and lo' below the coarse
// hi', so N >= n (hi_a + hi_b + 1) keeps the width within 1/n.
inline Bracket bracket_product(const ProductNode &p, const BigInt &n) {
  Bracket ca = bracket(p.a, 1);
  Bracket cb = bracket(p.b, 1);
  PosRational bound = ca.hi + cb.hi + one();
  BigInt refined = ceil(PosRational(n) * bound);
  Bracket x = bracket(p.a, refined);
  Bracket y = bracket(p.b, refined);
  return {x.lo * y.lo, x.hi * y.hi};
}

// With (x, y) a bracket of a: 1/x is outside the inverse, and anything
// strictly below 1/y is inside. lo = (1/y) m/(m+1).
// 1/x - lo = (y - x)/(x y) + 1/(y (m + 1)); both terms are held under
// 1/(2n) using the coarse lower bound L = lo_1/2 < x.
inline Bracket bracket_inverse(const InverseNode &inv, const BigInt &n) {
  Bracket coarse = bracket(inv.a, 1);
  PosRational floor_bound = half(coarse.lo);
  PosRational twice_n(2 * n);
  BigInt refined = ceil(twice_n / (floor_bound * floor_bound));
  BigInt keep_positive = ceil(PosRational(2) / coarse.lo);
  if (keep_positive > refined) {
    refined = keep_positive;
  }
  Bracket r = bracket(inv.a, refined);
  BigInt m = ceil(twice_n / floor_bound);
  PosRational shrink(m, m + 1);
  return {reciprocal(r.hi) * shrink, reciprocal(r.lo)};
}

// Refine both operands until lower's nonmember sits below upper's member.
// Then x' - y is in the difference (z + y = x' with x' in upper, y not in
// lower) and y' - x bounds it from above; width <= 2/p.
inline Bracket bracket_difference(const DifferenceNode &d, const BigInt &n) {
  const BigInt start = 2 * n;
  const BigInt cap = start * d.budget;
  for (BigInt p = start; p <= cap; p *= 2) {
    Bracket lower = bracket(d.lower, p);
    Bracket upper = bracket(d.upper, p);
    if (upper.lo > lower.hi) {
      return {sub_strict(upper.lo, lower.hi), sub_strict(upper.hi, lower.lo)};
    }
    if (lower.lo >= upper.hi) {
      throw PrecisionBudgetExhausted(
          "difference: subtrahend certified above minuend");
    }
  }
  throw PrecisionBudgetExhausted(
      "difference: no separation within the refinement budget");
}

inline Bracket bracket_sup(const SupNode &s, const BigInt &n) {
  Bracket result = bracket(s.members.front(), n);
  for (auto it = s.members.begin() + 1; it != s.members.end(); ++it) {
    Bracket b = bracket(*it, n);
    result.lo = max(result.lo, b.lo);
    result.hi = max(result.hi, b.hi);
  }
  return result;
}

inline Bracket compute_bracket(const Node &node, const BigInt &n) {
  return std::visit(
      Overloaded{
          [&](const SumNode &s) { return bracket_sum(s, n); },
          [&](const ProductNode &p) { return bracket_product(p, n); },
          [&](const InverseNode &i) { return bracket_inverse(i, n); },
          [&](const DifferenceNode &d) { return bracket_difference(d, n); },
          [&](const SupNode &s) { return bracket_sup(s, n); },
          [&](const auto &) { return bisect_leaf(node, n); },
      },
      node.kind);
}

} // namespace detail

/// A member lo and nonmember hi of `a` with hi - lo <= 1/n.
inline Bracket bracket(const Cut &a, const BigInt &n) {
  if (n < 1) {
    throw std::invalid_argument("bracket: precision must be >= 1");
  }
  const detail::Node &node = a.node();
  {
    std::lock_guard lock(node.memo_mutex);
    if (auto it = node.memo.find(n); it != node.memo.end()) {
      return it->second;
    }
  }
  Bracket b = detail::compute_bracket(node, n);
  std::lock_guard lock(node.memo_mutex);
  return node.memo.emplace(n, std::move(b)).first->second;
}

/// A member x and nonmember y with x/y > (m-1)/m, for m >= 2.
inline Bracket ratio_refine(const Cut &a, const BigInt &m) {
  if (m < 2) {
    throw std::invalid_argument("ratio_refine: m must be >= 2");
  }
  PosRational x1 = bracket(a, 1).lo;
  BigInt h = archimedean_bound(PosRational(m) / x1);
  return bracket(a, h);
}

/// Less certifies a strictly inside b (a's nonmember is b's member);
/// Overlap means the values are within 2/n of each other.
inline CutOrder compare(const Cut &a, const Cut &b, const BigInt &n) {
  Bracket x = bracket(a, n);
  Bracket y = bracket(b, n);
  if (x.hi <= y.lo) {
    return CutOrder::Less;
  }
  if (y.hi <= x.lo) {
    return CutOrder::Greater;
  }
  return CutOrder::Overlap;
}

// ---------------------------------------------------------------------------
// Debug form

inline void write_sexpr(std::ostream &os, const Cut &a) {
  std::visit(detail::Overloaded{
                 [&](const detail::RationalLeaf &l) {
                   os << "(s_r " << l.r << ")";
                 },
                 [&](const detail::RootLeaf &l) {
                   os << "(root " << l.degree << " " << l.radicand << ")";
                 },
                 [&](const detail::OracleLeaf &) { os << "(oracle)"; },
                 [&](const detail::SumNode &s) {
                   os << "(sum ";
                   write_sexpr(os, s.a);
                   os << " ";
                   write_sexpr(os, s.b);
                   os << ")";
                 },
                 [&](const detail::ProductNode &p) {
                   os << "(product ";
                   write_sexpr(os, p.a);
                   os << " ";
                   write_sexpr(os, p.b);
                   os << ")";
                 },
                 [&](const detail::InverseNode &i) {
                   os << "(inverse ";
                   write_sexpr(os, i.a);
                   os << ")";
                 },
                 [&](const detail::DifferenceNode &d) {
                   os << "(difference ";
                   write_sexpr(os, d.lower);
                   os << " ";
                   write_sexpr(os, d.upper);
                   os << ")";
                 },
                 [&](const detail::SupNode &s) {
                   os << "(sup";
                   for (const Cut &c : s.members) {
                     os << " ";
                     write_sexpr(os, c);
                   }
                   os << ")";
                 },
             },
             a.node().kind);
}

inline std::string to_sexpr(const Cut &a) {
  std::ostringstream os;
  write_sexpr(os, a);
  return os.str();
}

} // namespace reals

#endif // REALS_CUT_HPP
