#pragma once

// Degree expressions from the witness tables.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '·' | '/') unary | <juxtaposition> power)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := integer | 'q' | 'n' | 'phi' integer | '(' expr ')'
//
// phi<k> is the k-th cyclotomic polynomial at q. Evaluation is exact over
// the rationals; rational exponents need exact roots.

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "sqfree/bigint.hpp"
#include "sqfree/error.hpp"
#include "sqfree/lie.hpp"

namespace sqfree {

using Rational = boost::multiprecision::cpp_rational;

/// The value is not an integer (or not rational) at this substitution.
class NonIntegralError : public InputError {
public:
  using InputError::InputError;
};

struct Expr {
  enum class Op { Num, Q, N, Phi, Add, Sub, Mul, Div, Pow, Neg };
  Op op = Op::Num;
  BigInt value = 0;  // Num literal, or k for Phi
  std::shared_ptr<const Expr> lhs, rhs;  // Neg uses lhs

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.op != b.op || a.value != b.value) return false;
    auto same = [](const std::shared_ptr<const Expr>& x, const std::shared_ptr<const Expr>& y) {
      return (!x && !y) || (x && y && *x == *y);
    };
    return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
  }
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  ExprPtr parse_all() {
    auto e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_, ParseError::Unit::Column); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // '·' is U+00B7, two bytes in UTF-8
  bool at_dot() const { return s_.substr(pos_, 2) == "\xC2\xB7"; }

  static ExprPtr node(Expr::Op op, ExprPtr l = nullptr, ExprPtr r = nullptr, BigInt v = 0) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    e->value = std::move(v);
    return e;
  }

  ExprPtr expr() {
    auto e = term();
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        auto op = s_[pos_++] == '+' ? Expr::Op::Add : Expr::Op::Sub;
        e = node(op, e, term());
      } else {
        return e;
      }
    }
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'q' || c == 'n' ||
           s_.substr(pos_, 3) == "phi";
  }

  ExprPtr term() {
    auto e = unary();
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
        auto op = s_[pos_++] == '*' ? Expr::Op::Mul : Expr::Op::Div;
        e = node(op, e, unary());
      } else if (at_dot()) {
        pos_ += 2;
        e = node(Expr::Op::Mul, e, unary());
      } else if (starts_primary()) {
        e = node(Expr::Op::Mul, e, power());
      } else {
        return e;
      }
    }
  }

  ExprPtr unary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return node(Expr::Op::Neg, unary());
    }
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return node(Expr::Op::Pow, base, unary());
    }
    return base;
  }

  BigInt integer() {
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 200) fail("integer literal too long");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return node(Expr::Op::Num, nullptr, nullptr, integer());
    if (c == '(') {
      ++pos_;
      auto e = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (s_.substr(pos_, 3) == "phi") {
      pos_ += 3;
      auto k = integer();
      if (k < 1 || k > 100000) fail("cyclotomic index out of range");
      return node(Expr::Op::Phi, nullptr, nullptr, k);
    }
    if (c == 'q' || c == 'n') {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
        --pos_;
        fail("unknown identifier");
      }
      return node(c == 'q' ? Expr::Op::Q : Expr::Op::N);
    }
    fail("unknown token '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline int precedence(Expr::Op op) {
  switch (op) {
    case Expr::Op::Add:
    case Expr::Op::Sub: return 1;
    case Expr::Op::Mul:
    case Expr::Op::Div: return 2;
    case Expr::Op::Neg: return 3;
    case Expr::Op::Pow: return 4;
    default: return 5;
  }
}

/// Exact k-th root of x >= 0, if x is a perfect k-th power.
inline std::optional<BigInt> exact_root(const BigInt& x, unsigned k) {
  if (x < 2) return x;
  BigInt lo = 1, hi = 1;
  while (big_pow(hi, k) <= x) hi *= 2;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) / 2;
    (big_pow(mid, k) <= x ? lo : hi) = mid;
  }
  if (big_pow(lo, k) == x) return lo;
  return std::nullopt;
}

}  // namespace detail

inline ExprPtr parse_degree_expr(std::string_view text) { return detail::ExprParser(text).parse_all(); }

/// Prints with the fewest parentheses that reparse to the same tree.
inline std::string to_string(const Expr& e) {
  using Op = Expr::Op;
  const int prec = detail::precedence(e.op);
  auto wrap = [](const Expr& child, bool paren) { return paren ? "(" + to_string(child) + ")" : to_string(child); };
  switch (e.op) {
    case Op::Num: return e.value.str();
    case Op::Q: return "q";
    case Op::N: return "n";
    case Op::Phi: return "phi" + e.value.str();
    case Op::Neg: return "-" + wrap(*e.lhs, detail::precedence(e.lhs->op) < prec);
    case Op::Pow:
      return wrap(*e.lhs, detail::precedence(e.lhs->op) <= prec) + "^" +
             wrap(*e.rhs, detail::precedence(e.rhs->op) < detail::precedence(Op::Neg));
    default: {
      const char* sym = e.op == Op::Add ? "+" : e.op == Op::Sub ? "-" : e.op == Op::Mul ? "*" : "/";
      return wrap(*e.lhs, detail::precedence(e.lhs->op) < prec) + sym +
             wrap(*e.rhs, detail::precedence(e.rhs->op) <= prec);
    }
  }
}

struct Substitution {
  std::optional<BigInt> q;
  std::optional<BigInt> n;
};

inline Rational evaluate(const Expr& e, const Substitution& s) {
  using Op = Expr::Op;
  switch (e.op) {
    case Op::Num: return Rational(e.value);
    case Op::Q:
      if (!s.q) throw InputError("expression uses q but no q was given");
      return Rational(*s.q);
    case Op::N:
      if (!s.n) throw InputError("expression uses n but no n was given");
      return Rational(*s.n);
    case Op::Phi:
      if (!s.q) throw InputError("expression uses phi but no q was given");
      return Rational(cyclotomic_poly_eval(static_cast<std::uint64_t>(e.value), *s.q));
    case Op::Neg: return -evaluate(*e.lhs, s);
    case Op::Add: return evaluate(*e.lhs, s) + evaluate(*e.rhs, s);
    case Op::Sub: return evaluate(*e.lhs, s) - evaluate(*e.rhs, s);
    case Op::Mul: return evaluate(*e.lhs, s) * evaluate(*e.rhs, s);
    case Op::Div: {
      auto d = evaluate(*e.rhs, s);
      if (d == 0) throw NonIntegralError("division by zero");
      return evaluate(*e.lhs, s) / d;
    }
    case Op::Pow: {
      const Rational base = evaluate(*e.lhs, s), ex = evaluate(*e.rhs, s);
      const BigInt num = numerator(ex), den = denominator(ex);
      if (abs(num) > 100000 || den > 64) throw InputError("exponent out of range");
      const auto a = static_cast<long>(num);
      const auto b = static_cast<unsigned>(den);
      Rational root = base;
      if (b > 1) {
        const bool neg = base < 0;
        if (neg && b % 2 == 0) throw NonIntegralError("even root of a negative number");
        auto rn = detail::exact_root(abs(numerator(base)), b);
        auto rd = detail::exact_root(denominator(base), b);
        if (!rn || !rd) throw NonIntegralError("root is irrational");
        root = Rational(neg ? -*rn : *rn, *rd);
      }
      if (a < 0 && root == 0) throw NonIntegralError("zero to a negative power");
      Rational r = 1;
      for (long i = 0; i < (a < 0 ? -a : a); ++i) r *= root;
      return a < 0 ? 1 / r : r;
    }
  }
  throw DefectError("unknown expression node");
}

/// Evaluates and requires an integer result.
inline BigInt evaluate_integer(const Expr& e, const Substitution& s) {
  auto v = evaluate(e, s);
  if (denominator(v) != 1) throw NonIntegralError("value " + v.str() + " is not an integer");
  return numerator(v);
}

}  // namespace sqfree
