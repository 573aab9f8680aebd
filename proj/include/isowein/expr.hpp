/* Copyright 2026 The isowein Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Expression trees for graph surfaces z(x, y) and univariate factors.
//
// Grammar (ASCII, whitespace ignored):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | 'x' | 'y' | func '(' expr ')' | '(' expr ')'
//   func    := exp | ln | sin | cos | sqrt
//
// '^' is right-associative and binds tighter than unary minus, so -x^2 is
// -(x^2). Exponents must be constant; they are folded to a number when
// parsed. A minus sign directly in front of a bare literal (not followed by
// '^') is folded into a negative constant. There is no implicit
// multiplication.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "isowein/errors.hpp"

namespace isowein {

enum class NodeKind : std::uint8_t {
  kConst,
  kVarX,
  kVarY,
  kNeg,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPowInt,
  kPowReal,
  kExp,
  kLn,
  kSin,
  kCos,
  kSqrt,
};

struct Node;

// Immutable handle to an expression tree. Copies share structure.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  const Node& node() const { return *node_; }
  bool empty() const { return node_ == nullptr; }

 private:
  std::shared_ptr<const Node> node_;
};

struct Node {
  NodeKind kind{};
  double value = 0;     // kConst literal, kPowReal exponent
  long int_exp = 0;     // kPowInt exponent
  Expr lhs;             // operand of unary nodes, base of powers
  Expr rhs;
};

// ---- construction --------------------------------------------------------

namespace detail {
inline Expr make(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }
inline Expr make_unary(NodeKind k, Expr a) {
  Node n;
  n.kind = k;
  n.lhs = std::move(a);
  return make(std::move(n));
}
inline Expr make_binary(NodeKind k, Expr a, Expr b) {
  Node n;
  n.kind = k;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make(std::move(n));
}
}  // namespace detail

inline Expr constant(double c) {
  Node n;
  n.kind = NodeKind::kConst;
  n.value = c;
  return detail::make(std::move(n));
}
inline Expr var_x() {
  Node n;
  n.kind = NodeKind::kVarX;
  return detail::make(std::move(n));
}
inline Expr var_y() {
  Node n;
  n.kind = NodeKind::kVarY;
  return detail::make(std::move(n));
}

inline Expr operator-(Expr a) { return detail::make_unary(NodeKind::kNeg, std::move(a)); }
inline Expr operator+(Expr a, Expr b) {
  return detail::make_binary(NodeKind::kAdd, std::move(a), std::move(b));
}
inline Expr operator-(Expr a, Expr b) {
  return detail::make_binary(NodeKind::kSub, std::move(a), std::move(b));
}
inline Expr operator*(Expr a, Expr b) {
  return detail::make_binary(NodeKind::kMul, std::move(a), std::move(b));
}
inline Expr operator/(Expr a, Expr b) {
  return detail::make_binary(NodeKind::kDiv, std::move(a), std::move(b));
}

// Integral exponents of moderate size become kPowInt, everything else kPowReal.
inline Expr pow(Expr base, double exponent) {
  Node n;
  n.lhs = std::move(base);
  if (std::isfinite(exponent) && std::nearbyint(exponent) == exponent &&
      std::fabs(exponent) <= 1e6) {
    n.kind = NodeKind::kPowInt;
    n.int_exp = static_cast<long>(exponent);
  } else {
    n.kind = NodeKind::kPowReal;
    n.value = exponent;
  }
  return detail::make(std::move(n));
}

inline Expr exp(Expr a) { return detail::make_unary(NodeKind::kExp, std::move(a)); }
inline Expr ln(Expr a) { return detail::make_unary(NodeKind::kLn, std::move(a)); }
inline Expr sin(Expr a) { return detail::make_unary(NodeKind::kSin, std::move(a)); }
inline Expr cos(Expr a) { return detail::make_unary(NodeKind::kCos, std::move(a)); }
inline Expr sqrt(Expr a) { return detail::make_unary(NodeKind::kSqrt, std::move(a)); }

// ---- inspection ----------------------------------------------------------

inline bool is_unary(NodeKind k) {
  switch (k) {
    case NodeKind::kNeg:
    case NodeKind::kPowInt:
    case NodeKind::kPowReal:
    case NodeKind::kExp:
    case NodeKind::kLn:
    case NodeKind::kSin:
    case NodeKind::kCos:
    case NodeKind::kSqrt:
      return true;
    default:
      return false;
  }
}

inline bool is_binary(NodeKind k) {
  return k == NodeKind::kAdd || k == NodeKind::kSub || k == NodeKind::kMul ||
         k == NodeKind::kDiv;
}

// Structural equality; constants compare by bit pattern.
inline bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  const Node& p = a.node();
  const Node& q = b.node();
  if (p.kind != q.kind) return false;
  switch (p.kind) {
    case NodeKind::kConst:
    case NodeKind::kPowReal:
      if (std::signbit(p.value) != std::signbit(q.value) || !(p.value == q.value)) return false;
      break;
    case NodeKind::kPowInt:
      if (p.int_exp != q.int_exp) return false;
      break;
    default:
      break;
  }
  if (is_unary(p.kind)) return structurally_equal(p.lhs, q.lhs);
  if (is_binary(p.kind))
    return structurally_equal(p.lhs, q.lhs) && structurally_equal(p.rhs, q.rhs);
  return true;
}

struct VariableUse {
  bool x = false;
  bool y = false;
};

inline void collect_variables(const Expr& e, VariableUse& use) {
  const Node& n = e.node();
  if (n.kind == NodeKind::kVarX) use.x = true;
  if (n.kind == NodeKind::kVarY) use.y = true;
  if (is_unary(n.kind) || is_binary(n.kind)) collect_variables(n.lhs, use);
  if (is_binary(n.kind)) collect_variables(n.rhs, use);
}

inline VariableUse variables(const Expr& e) {
  VariableUse use;
  collect_variables(e, use);
  return use;
}

// ---- plain evaluation ----------------------------------------------------

// Real-valued evaluation. Independent of the jet layer on purpose: the
// finite-difference oracle is built on this path only.
inline double evaluate(const Expr& e, double x, double y) {
  const Node& n = e.node();
  double r = 0;
  switch (n.kind) {
    case NodeKind::kConst:
      return n.value;
    case NodeKind::kVarX:
      return x;
    case NodeKind::kVarY:
      return y;
    case NodeKind::kNeg:
      return -evaluate(n.lhs, x, y);
    case NodeKind::kAdd:
      r = evaluate(n.lhs, x, y) + evaluate(n.rhs, x, y);
      break;
    case NodeKind::kSub:
      r = evaluate(n.lhs, x, y) - evaluate(n.rhs, x, y);
      break;
    case NodeKind::kMul:
      r = evaluate(n.lhs, x, y) * evaluate(n.rhs, x, y);
      break;
    case NodeKind::kDiv: {
      const double num = evaluate(n.lhs, x, y);
      const double den = evaluate(n.rhs, x, y);
      if (den == 0) throw DivisionByZero("division by zero");
      r = num / den;
      break;
    }
    case NodeKind::kPowInt: {
      const double b = evaluate(n.lhs, x, y);
      if (n.int_exp < 0 && b == 0) throw DivisionByZero("negative power of zero");
      r = std::pow(b, static_cast<double>(n.int_exp));
      break;
    }
    case NodeKind::kPowReal: {
      const double b = evaluate(n.lhs, x, y);
      if (!(b > 0)) throw DomainError("real power of a non-positive value");
      r = std::pow(b, n.value);
      break;
    }
    case NodeKind::kExp:
      r = std::exp(evaluate(n.lhs, x, y));
      break;
    case NodeKind::kLn: {
      const double a = evaluate(n.lhs, x, y);
      if (!(a > 0)) throw DomainError("ln of a non-positive value");
      r = std::log(a);
      break;
    }
    case NodeKind::kSin:
      r = std::sin(evaluate(n.lhs, x, y));
      break;
    case NodeKind::kCos:
      r = std::cos(evaluate(n.lhs, x, y));
      break;
    case NodeKind::kSqrt: {
      const double a = evaluate(n.lhs, x, y);
      if (a < 0) throw DomainError("sqrt of a negative value");
      r = std::sqrt(a);
      break;
    }
  }
  if (!std::isfinite(r)) throw OverflowError("non-finite value during evaluation");
  return r;
}

// ---- printing ------------------------------------------------------------

// Shortest decimal form that parses back to the same double.
inline std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace detail {

enum Prec : int { kPrecAdd = 1, kPrecMul = 2, kPrecUnary = 3, kPrecPow = 4, kPrecAtom = 5 };

inline int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::kAdd:
    case NodeKind::kSub:
      return kPrecAdd;
    case NodeKind::kMul:
    case NodeKind::kDiv:
      return kPrecMul;
    case NodeKind::kNeg:
      return kPrecUnary;
    case NodeKind::kConst:
      return n.value < 0 || std::signbit(n.value) ? kPrecUnary : kPrecAtom;
    case NodeKind::kPowInt:
    case NodeKind::kPowReal:
      return kPrecPow;
    default:
      return kPrecAtom;
  }
}

inline void print_to(const Expr& e, std::string& out);

inline void print_wrapped(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  print_to(e, out);
  if (parens) out += ')';
}

inline const char* function_name(NodeKind k) {
  switch (k) {
    case NodeKind::kExp:
      return "exp";
    case NodeKind::kLn:
      return "ln";
    case NodeKind::kSin:
      return "sin";
    case NodeKind::kCos:
      return "cos";
    default:
      return "sqrt";
  }
}

inline void print_to(const Expr& e, std::string& out) {
  const Node& n = e.node();
  switch (n.kind) {
    case NodeKind::kConst:
      out += format_number(n.value);
      return;
    case NodeKind::kVarX:
      out += 'x';
      return;
    case NodeKind::kVarY:
      out += 'y';
      return;
    case NodeKind::kNeg: {
      out += '-';
      const Node& a = n.lhs.node();
      // A bare literal would be folded into a negative constant on re-parse.
      const bool parens =
          precedence(a) < kPrecUnary || (a.kind == NodeKind::kConst && precedence(a) == kPrecAtom);
      print_wrapped(n.lhs, parens, out);
      return;
    }
    case NodeKind::kAdd:
    case NodeKind::kSub:
    case NodeKind::kMul:
    case NodeKind::kDiv: {
      const int p = precedence(n);
      print_wrapped(n.lhs, precedence(n.lhs.node()) < p, out);
      out += n.kind == NodeKind::kAdd   ? '+'
             : n.kind == NodeKind::kSub ? '-'
             : n.kind == NodeKind::kMul ? '*'
                                        : '/';
      // Left associativity: a right operand of equal precedence needs parens.
      print_wrapped(n.rhs, precedence(n.rhs.node()) <= p, out);
      return;
    }
    case NodeKind::kPowInt:
    case NodeKind::kPowReal:
      print_wrapped(n.lhs, precedence(n.lhs.node()) < kPrecAtom, out);
      out += '^';
      out += n.kind == NodeKind::kPowInt ? std::to_string(n.int_exp) : format_number(n.value);
      return;
    default:
      out += function_name(n.kind);
      out += '(';
      print_to(n.lhs, out);
      out += ')';
      return;
  }
}

}  // namespace detail

// Infix form with minimal parentheses; parse(print(e)) is structurally e.
inline std::string print(const Expr& e) {
  std::string out;
  detail::print_to(e, out);
  return out;
}

// ---- parsing -------------------------------------------------------------

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty input", pos_);
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("syntax error", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

  bool at_number() {
    const char c = peek();
    return is_digit(c) ||
           (c == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]));
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      Expr rhs = parse_term();
      lhs = c == '+' ? std::move(lhs) + std::move(rhs) : std::move(lhs) - std::move(rhs);
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      Expr rhs = parse_unary();
      lhs = c == '*' ? std::move(lhs) * std::move(rhs) : std::move(lhs) / std::move(rhs);
    }
  }

  Expr parse_unary() {
    if (peek() != '-') return parse_power();
    ++pos_;
    if (at_number()) {
      const std::size_t save = pos_;
      const double v = read_number();
      if (peek() != '^') return constant(-v);
      pos_ = save;
    }
    return -parse_unary();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (peek() != '^') return base;
    ++pos_;
    const std::size_t exp_at = pos_;
    Expr exponent = parse_unary();
    const VariableUse use = variables(exponent);
    if (use.x || use.y) throw ParseError("exponent must be constant", exp_at);
    double value = 0;
    try {
      value = evaluate(exponent, 0, 0);
    } catch (const Error&) {
      throw ParseError("exponent is not a finite constant", exp_at);
    }
    return isowein::pow(std::move(base), value);
  }

  double read_number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && is_digit(text_[end])) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && is_digit(text_[end])) ++end;
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t k = end + 1;
      if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
      if (k < text_.size() && is_digit(text_[k])) {
        while (k < text_.size() && is_digit(text_[k])) ++k;
        end = k;
      }
    }
    double v = 0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + end, v);
    if (res.ec == std::errc::result_out_of_range) throw ParseError("number out of range", start);
    if (res.ec != std::errc() || res.ptr != text_.data() + end)
      throw ParseError("malformed number", start);
    pos_ = end;
    return v;
  }

  Expr parse_primary() {
    const char c = peek();
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (at_number()) return constant(read_number());
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (is_alpha(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]))) ++pos_;
      const std::string_view id = text_.substr(start, pos_ - start);
      if (id == "x") return var_x();
      if (id == "y") return var_y();
      NodeKind k{};
      if (id == "exp")
        k = NodeKind::kExp;
      else if (id == "ln")
        k = NodeKind::kLn;
      else if (id == "sin")
        k = NodeKind::kSin;
      else if (id == "cos")
        k = NodeKind::kCos;
      else if (id == "sqrt")
        k = NodeKind::kSqrt;
      else
        throw ParseError("unknown identifier '" + std::string(id) + "'", start);
      expect('(');
      Expr arg = parse_expr();
      expect(')');
      return detail::make_unary(k, std::move(arg));
    }
    throw ParseError("syntax error", pos_);
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ == text_.size())
        throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (static_cast<unsigned char>(text[i]) > 0x7f) throw ParseError("non-ASCII character", i);
  }
  return detail::Parser(text).parse();
}

}  // namespace isowein
