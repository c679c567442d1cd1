#ifndef REALS_EXPR_HPP
#define REALS_EXPR_HPP

// Arithmetic expressions over rational literals and k-th roots of positive
// rational literals.
//
//   expr    := term (("+" | "-") term)*
//   term    := factor (("*" | "/") factor)*
//   factor  := "-" factor | primary
//   primary := rational | "sqrt" "(" rational ")"
//            | "root" "(" nat "," rational ")" | "(" expr ")"
//   rational := nat ("/" nat)?
//
// A "/" directly after a literal's numerator is read as part of the
// literal when followed by a nonzero natural, so "1/3" is a literal and
// "1/0" a division.

#include "reals/embed.hpp"

#include <cctype>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace reals {

/// Malformed input; offset is the byte position of the problem.
class SyntaxError : public std::invalid_argument {
public:
  SyntaxError(const std::string &what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Well-formed input outside the supported domain (root of a
/// non-positive literal, degree < 2).
class DomainError : public std::invalid_argument {
public:
  DomainError(const std::string &what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class ZeroDivisorAtPrecision : public ZeroAtPrecision {
public:
  using ZeroAtPrecision::ZeroAtPrecision;
};

/// Largest root degree the parser accepts.
inline constexpr unsigned kMaxRootDegree = 1000;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Literal {
  SignedRational value;
};
struct AddExpr {
  ExprPtr lhs, rhs;
};
struct SubExpr {
  ExprPtr lhs, rhs;
};
struct MulExpr {
  ExprPtr lhs, rhs;
};
struct DivExpr {
  ExprPtr lhs, rhs;
};
struct NegExpr {
  ExprPtr operand;
};
struct RootExpr {
  unsigned degree;
  PosRational radicand;
};

struct Expr {
  std::variant<Literal, AddExpr, SubExpr, MulExpr, DivExpr, NegExpr, RootExpr>
      node;
};

template <class T> ExprPtr make_expr(T node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

/// Structural equality of two trees.
inline bool same_tree(const Expr &a, const Expr &b) {
  if (a.node.index() != b.node.index()) {
    return false;
  }
  return std::visit(
      detail::Overloaded{
          [&](const Literal &l) {
            return l.value == std::get<Literal>(b.node).value;
          },
          [&](const NegExpr &n) {
            return same_tree(*n.operand, *std::get<NegExpr>(b.node).operand);
          },
          [&](const RootExpr &r) {
            const auto &o = std::get<RootExpr>(b.node);
            return r.degree == o.degree && r.radicand == o.radicand;
          },
          [&](const auto &bin) {
            using T = std::decay_t<decltype(bin)>;
            const auto &o = std::get<T>(b.node);
            return same_tree(*bin.lhs, *o.lhs) && same_tree(*bin.rhs, *o.rhs);
          },
      },
      a.node);
}

namespace detail {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'",
                        pos_);
    }
    return e;
  }

private:
  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = make_expr(AddExpr{lhs, term()});
      } else if (accept('-')) {
        lhs = make_expr(SubExpr{lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (true) {
      if (accept('*')) {
        lhs = make_expr(MulExpr{lhs, factor()});
      } else if (accept('/')) {
        lhs = make_expr(DivExpr{lhs, factor()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    if (accept('-')) {
      return make_expr(NegExpr{factor()});
    }
    return primary();
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) {
      throw SyntaxError("unexpected end of input", pos_);
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (is_digit(c)) {
      return make_expr(Literal{literal()});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      std::size_t start = pos_;
      std::string_view word = identifier();
      if (word == "sqrt") {
        expect('(');
        PosRational r = radicand();
        expect(')');
        return make_expr(RootExpr{2, std::move(r)});
      }
      if (word == "root") {
        expect('(');
        skip_space();
        std::size_t degree_at = pos_;
        BigInt degree = natural();
        if (degree < 2) {
          throw DomainError("root degree must be >= 2", degree_at);
        }
        if (degree > kMaxRootDegree) {
          throw DomainError("root degree too large", degree_at);
        }
        expect(',');
        PosRational r = radicand();
        expect(')');
        return make_expr(RootExpr{degree.convert_to<unsigned>(), std::move(r)});
      }
      throw SyntaxError("unknown function '" + std::string(word) + "'", start);
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  // nat ("/" nonzero-nat)?
  SignedRational literal() {
    BigInt num = natural();
    std::size_t save = pos_;
    if (accept('/')) {
      skip_space();
      if (pos_ < text_.size() && is_digit(text_[pos_])) {
        std::size_t den_start = pos_;
        BigInt den = natural();
        if (den != 0) {
          return SignedRational::from_integers(num, den);
        }
        pos_ = den_start;
      }
      pos_ = save;
    }
    return SignedRational::from_integers(num, 1);
  }

  // Root arguments: an optional sign is accepted so that a negative
  // radicand is reported as a domain error rather than a syntax error.
  PosRational radicand() {
    skip_space();
    std::size_t at = pos_;
    bool negative = accept('-');
    skip_space();
    BigInt num = natural();
    BigInt den = 1;
    if (accept('/')) {
      den = natural();
    }
    if (negative || num == 0 || den == 0) {
      throw DomainError("root radicand must be a positive rational", at);
    }
    return PosRational(num, den);
  }

  BigInt natural() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      ++pos_;
    }
    if (start == pos_) {
      throw SyntaxError("expected a natural number", start);
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw SyntaxError("expected '" + std::string(1, c) + "'", pos_);
    }
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void write_expr(std::string &out, const Expr &e) {
  auto binary = [&](const char *op, const ExprPtr &l, const ExprPtr &r) {
    out += "(";
    write_expr(out, *l);
    out += op;
    // A bare literal after "/" would be absorbed into the left literal.
    bool guard = std::string_view(op) == " / " &&
                 std::holds_alternative<Literal>(r->node);
    if (guard) {
      out += "(";
    }
    write_expr(out, *r);
    if (guard) {
      out += ")";
    }
    out += ")";
  };
  std::visit(Overloaded{
                 [&](const Literal &l) {
                   const SignedRational &v = l.value;
                   if (v.sign() == RationalSign::Neg) {
                     out += "-";
                   }
                   BigInt n = abs(v.signed_num());
                   out += n.str();
                   if (v.den() != 1) {
                     out += "/" + v.den().str();
                   }
                 },
                 [&](const AddExpr &b) { binary(" + ", b.lhs, b.rhs); },
                 [&](const SubExpr &b) { binary(" - ", b.lhs, b.rhs); },
                 [&](const MulExpr &b) { binary(" * ", b.lhs, b.rhs); },
                 [&](const DivExpr &b) { binary(" / ", b.lhs, b.rhs); },
                 [&](const NegExpr &n) {
                   out += "-(";
                   write_expr(out, *n.operand);
                   out += ")";
                 },
                 [&](const RootExpr &r) {
                   if (r.degree == 2) {
                     out += "sqrt(" + r.radicand.str() + ")";
                   } else {
                     out += "root(" + std::to_string(r.degree) + ", " +
                            r.radicand.str() + ")";
                   }
                 },
             },
             e.node);
}

} // namespace detail

inline ExprPtr parse(std::string_view text) {
  return detail::Parser(text).parse();
}

/// Fully parenthesised text that parses back to the same tree.
inline std::string unparse(const Expr &e) {
  std::string out;
  detail::write_expr(out, e);
  return out;
}

/// Builds the real denoted by `e`. Division certifies its divisor nonzero
/// at precision 1/n and throws ZeroDivisorAtPrecision otherwise.
inline Real evaluate(const Expr &e, const BigInt &n,
                     const BigInt &budget = kDefaultBudget) {
  return std::visit(
      detail::Overloaded{
          [&](const Literal &l) { return g_embed(l.value); },
          [&](const AddExpr &b) {
            return add(evaluate(*b.lhs, n, budget),
                       evaluate(*b.rhs, n, budget));
          },
          [&](const SubExpr &b) {
            return sub(evaluate(*b.lhs, n, budget),
                       evaluate(*b.rhs, n, budget));
          },
          [&](const MulExpr &b) {
            return mul(evaluate(*b.lhs, n, budget),
                       evaluate(*b.rhs, n, budget));
          },
          [&](const DivExpr &b) {
            Real divisor = evaluate(*b.rhs, n, budget);
            try {
              return mul(evaluate(*b.lhs, n, budget), inv(divisor, n, budget));
            } catch (const ZeroAtPrecision &z) {
              throw ZeroDivisorAtPrecision(z.precision());
            }
          },
          [&](const NegExpr &u) { return neg(evaluate(*u.operand, n, budget)); },
          [&](const RootExpr &r) {
            return f_embed(root_cut(r.degree, r.radicand));
          },
      },
      e.node);
}

} // namespace reals

#endif // REALS_EXPR_HPP
