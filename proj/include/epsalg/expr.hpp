#pragma once

// Expression syntax shared by the CLI, spec files and tests:
//
//   expr    := unary (('+' | '-') unary)*
//   unary   := '-' unary | product
//   product := power ('*' power)*
//   power   := atom ('^' INT)?
//   atom    := NUMBER | IDENT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'
//
// NUMBER is `digits` or `digits/digits`. Reserved identifiers: h, I, r2. Functions: comm, pb, J.

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epsalg/deformation.hpp"
#include "epsalg/errors.hpp"
#include "epsalg/noa.hpp"
#include "epsalg/poisson.hpp"
#include "epsalg/presets.hpp"

namespace epsalg {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Pow, Call };
  Kind kind = Kind::Number;
  Rational value;              // Number
  std::string name;            // Symbol, Call
  long exponent = 0;           // Pow
  std::vector<ExprPtr> args;   // operands
  std::size_t offset = 0;      // byte offset of the node in the source
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ < src_.size()) {
      if (src_[pos_] == ')') fail("unbalanced parenthesis");
      fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr node(Expr::Kind kind, std::size_t offset, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->offset = offset;
    e->args = std::move(args);
    return e;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = node(Expr::Kind::Add, at, {lhs, parse_unary()});
      } else if (accept('-')) {
        lhs = node(Expr::Kind::Sub, at, {lhs, parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_unary() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) return node(Expr::Kind::Neg, at, {parse_unary()});
    return parse_product();
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_power();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = node(Expr::Kind::Mul, at, {lhs, parse_power()});
    }
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t digits_at = pos_;
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += src_[pos_++];
    if (digits.empty()) fail_at("expected a non-negative integer exponent", digits_at);
    if (digits.size() > 6) fail_at("exponent too large", digits_at);
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->offset = at;
    e->exponent = std::stol(digits);
    e->args = {base};
    return e;
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) out += src_[pos_++];
    return out;
  }

  ExprPtr parse_atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = read_digits();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("malformed rational");
        if (den.find_first_not_of('0') == std::string::npos) fail_at("malformed rational: zero denominator", at);
        text += "/" + den;
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->offset = at;
      e->value = Rational(text);
      e->value.canonicalize();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' || src_[pos_] == '\'')) {
        name += src_[pos_++];
      }
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '(') {
        ++pos_;
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Call;
        e->offset = at;
        e->name = name;
        e->args.push_back(parse_expr());
        while (accept(',')) e->args.push_back(parse_expr());
        if (!accept(')')) fail("unbalanced parenthesis: expected ')'");
        return e;
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Symbol;
      e->offset = at;
      e->name = std::move(name);
      return e;
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      if (!accept(')')) fail("unbalanced parenthesis: expected ')'");
      return inner;
    }
    if (c == ')') fail("unbalanced parenthesis");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// Binding strength of a node as printed: sums 1, negation 2, products 3, powers 4, atoms 5.
inline int strength(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Neg: return 2;
    case Expr::Kind::Mul: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

inline std::string print_at(const Expr& e, int min_strength);

inline std::string print_node(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.value.get_str();
    case Expr::Kind::Symbol: return e.name;
    case Expr::Kind::Neg: return "-" + print_at(*e.args[0], 2);
    case Expr::Kind::Add: return print_at(*e.args[0], 1) + " + " + print_at(*e.args[1], 2);
    case Expr::Kind::Sub: return print_at(*e.args[0], 1) + " - " + print_at(*e.args[1], 2);
    case Expr::Kind::Mul: return print_at(*e.args[0], 3) + "*" + print_at(*e.args[1], 4);
    case Expr::Kind::Pow: return print_at(*e.args[0], 5) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Call: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + print_at(*e.args[i], 0);
      return out + ")";
    }
  }
  return {};
}

inline std::string print_at(const Expr& e, int min_strength) {
  const std::string s = print_node(e);
  return strength(e) < min_strength ? "(" + s + ")" : s;
}

}  // namespace detail

inline ExprPtr parse_expr(std::string_view src) { return detail::Parser(src).parse_all(); }

/// Text with the fewest parentheses that parses back to the same tree.
inline std::string print_expr(const Expr& e) { return detail::print_at(e, 0); }

/// Structural equality ignoring source offsets.
inline bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.exponent != b.exponent ||
      a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!expr_equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

/// Evaluates expressions to elements of the free algebra on `alphabet`. The optional
/// algebra enables comm and J and fixes h when its parameter is a constant; the optional
/// expansion enables pb.
class Evaluator {
 public:
  explicit Evaluator(std::shared_ptr<const Alphabet> alphabet) : alphabet_(std::move(alphabet)) {}

  explicit Evaluator(const Algebra& alg, const DeformationExpansion* expansion = nullptr,
                     const CommutationFactor* factor = nullptr)
      : alphabet_(alg.alphabet_ptr()), algebra_(&alg), expansion_(expansion), factor_(factor) {
    if (!alg.symbolic()) h_value_ = alg.parameter();
  }

  Element operator()(const Expr& e) const { return eval(e); }
  Element operator()(std::string_view src) const { return eval(*parse_expr(src)); }

 private:
  const CommutationFactor& factor() const { return factor_ ? *factor_ : algebra_->factor(); }

  Element eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Number: return Element::scalar(HPoly(Scalar(e.value)));
      case Expr::Kind::Symbol: return symbol(e);
      case Expr::Kind::Neg: return -eval(*e.args[0]);
      case Expr::Kind::Add: return eval(*e.args[0]) + eval(*e.args[1]);
      case Expr::Kind::Sub: return eval(*e.args[0]) - eval(*e.args[1]);
      case Expr::Kind::Mul: return eval(*e.args[0]) * eval(*e.args[1]);
      case Expr::Kind::Pow: {
        const Element base = eval(*e.args[0]);
        Element out = Element::one();
        for (long k = 0; k < e.exponent; ++k) out = out * base;
        return out;
      }
      case Expr::Kind::Call: return call(e);
    }
    return {};
  }

  Element symbol(const Expr& e) const {
    if (e.name == "h") return Element::scalar(h_value_ ? *h_value_ : HPoly::h());
    if (e.name == "I") return Element::scalar(HPoly(Scalar::imag()));
    if (e.name == "r2") return Element::scalar(HPoly(Scalar::sqrt2()));
    const auto l = alphabet_->find(e.name);
    if (!l) throw ParseError("unknown generator '" + e.name + "'", e.offset);
    return Element::word({*l});
  }

  Element call(const Expr& e) const {
    auto arity = [&](std::size_t n) {
      if (e.args.size() != n) {
        throw ParseError(e.name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"), e.offset);
      }
    };
    if (e.name == "comm") {
      arity(2);
      if (!algebra_) throw ParseError("comm needs an algebra", e.offset);
      return epsilon_commutator(*algebra_, factor(), normalized(eval(*e.args[0])), normalized(eval(*e.args[1])));
    }
    if (e.name == "pb") {
      arity(2);
      if (!expansion_) throw ParseError("pb needs a symbolic number operator algebra", e.offset);
      const CommutationFactor& f = factor_ ? *factor_ : expansion_->classical().factor();
      return poisson_bracket(*expansion_, f, eval(*e.args[0]), eval(*e.args[1]));
    }
    if (e.name == "J") {
      arity(1);
      if (!algebra_ || !algebra_->noa()) throw ParseError("J needs a number operator algebra", e.offset);
      return algebra_->normalize(apply_J(*algebra_, eval(*e.args[0])));
    }
    throw ParseError("unknown function '" + e.name + "'", e.offset);
  }

  Element normalized(const Element& x) const { return algebra_ ? algebra_->normalize(x) : x; }

  std::shared_ptr<const Alphabet> alphabet_;
  const Algebra* algebra_ = nullptr;
  const DeformationExpansion* expansion_ = nullptr;
  const CommutationFactor* factor_ = nullptr;
  std::optional<HPoly> h_value_;
};

/// Parses a polynomial in h over K (no generators).
inline HPoly parse_hpoly(std::string_view src) {
  // A single unnamable generator: every identifier other than h, I, r2 is then unknown.
  static const auto none = std::make_shared<const Alphabet>(std::vector<Generator>{{"#", std::nullopt, Grade(std::vector<long>{})}});
  const Element e = Evaluator(none)(src);
  return e.coefficient({});
}

/// Parses an element of K, e.g. the canonical text `1/2 - I + 3*I*r2`.
inline Scalar parse_scalar(std::string_view src) {
  const HPoly p = parse_hpoly(src);
  if (!p.is_constant()) throw ParseError("expected a constant, found a polynomial in h", 0);
  return p.constant_term();
}

}  // namespace epsalg
