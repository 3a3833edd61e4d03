/*
 *  Copyright 2026 The radford-hopf Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */
#include "radford/expr.hpp"

#include <cctype>

namespace radford {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expr e = parse_expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  Expr parse_expr() {
    Expr::Sum sum;
    sum.terms.emplace_back(false, parse_term());
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      sum.terms.emplace_back(c == '-', parse_term());
    }
    if (sum.terms.size() == 1 && !sum.terms[0].first) return std::move(sum.terms[0].second);
    return Expr{std::move(sum)};
  }

  Expr parse_term() {
    skip_space();
    Expr::Product product;
    if (peek() == '-') {
      product.negated = true;
      advance();
    }
    product.factors.push_back(parse_factor());
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      advance();
      product.factors.push_back(parse_factor());
    }
    if (!product.negated && product.factors.size() == 1) return std::move(product.factors[0]);
    return Expr{std::move(product)};
  }

  Expr parse_factor() {
    Expr base = parse_atom();
    skip_space();
    if (peek() != '^') return base;
    advance();
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
    std::string digits = read_digits();
    if (digits.size() > 9) fail("exponent too large");
    return Expr{Expr::Power{std::make_unique<Expr>(std::move(base)), std::stoul(digits)}};
  }

  std::string read_digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  Expr parse_atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    switch (c) {
      case 'g':
      case 'x':
      case 'y':
      case 'i':
      case 'w':
      case 'z':
        advance();
        if (std::isalnum(static_cast<unsigned char>(peek())))
          fail("unknown name; write products with an explicit '*'");
        return Expr{Expr::Atom{c, Rational(0)}};
      case '(': {
        advance();
        Expr inner = parse_expr();
        skip_space();
        if (peek() != ')') fail("expected ')'");
        advance();
        return inner;
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = read_digits();
      if (peek() == '/') {
        advance();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator after '/'");
        std::string den = read_digits();
        if (mpz_class(den) == 0) fail("zero denominator");
        text += "/" + den;
      }
      return Expr{Expr::Atom{'q', parse_rational(text)}};
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

Element power(const Element& base, unsigned long k) {
  Element result = Element::one(base.context_ptr());
  Element b = base;
  while (k > 0) {
    if (k & 1UL) result = result * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return result;
}

std::string rational_term(const Rational& q, const std::string& unit) {
  if (unit.empty()) return to_string(q);
  if (q == 1) return unit;
  if (q == -1) return "-" + unit;
  return to_string(q) + "*" + unit;
}

std::string join_signed(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (i == 0) {
      out = p;
    } else if (!p.empty() && p[0] == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out;
}

// Coefficient and basis text joined into a single signed term.
std::string scaled(const Scalar& c, const std::string& unit) {
  if (c.is_rational()) return rational_term(c.coords()[0], unit);
  std::string s = "(" + format(c) + ")";
  return unit.empty() ? s : s + "*" + unit;
}

}  // namespace

Expr parse(std::string_view input) { return Parser(input).parse_all(); }

Element evaluate(const Expr& expr, const ContextPtr& ctx) {
  return std::visit(
      [&](const auto& node) -> Element {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Atom>) {
          switch (node.symbol) {
            case 'g': return Element::g(ctx);
            case 'x': return Element::x(ctx);
            case 'y': return Element::y(ctx);
            case 'i': return Element::constant(Scalar::imaginary_unit(ctx));
            case 'w': return Element::constant(Scalar::omega(ctx));
            case 'z': return Element::constant(Scalar::zeta_power(ctx, 1));
            default: return Element::constant(Scalar(ctx, node.value));
          }
        } else if constexpr (std::is_same_v<T, Expr::Power>) {
          return power(evaluate(*node.base, ctx), node.exponent);
        } else if constexpr (std::is_same_v<T, Expr::Product>) {
          Element out = Element::one(ctx);
          for (const auto& f : node.factors) out = out * evaluate(f, ctx);
          return node.negated ? -out : out;
        } else {
          Element out(ctx);
          for (const auto& [negated, term] : node.terms) {
            if (negated) {
              out -= evaluate(term, ctx);
            } else {
              out += evaluate(term, ctx);
            }
          }
          return out;
        }
      },
      expr.node);
}

Element parse_element(std::string_view input, const ContextPtr& ctx) {
  return evaluate(parse(input), ctx);
}

Scalar parse_scalar(std::string_view input, const ContextPtr& ctx) {
  Element e = parse_element(input, ctx);
  for (const auto& [b, c] : e.terms()) {
    if (b != Monomial{0, 0, 0}) {
      throw DomainError("expected a scalar, got '" + format(e) + "'");
    }
  }
  return e.coefficient({0, 0, 0});
}

std::string format(const Scalar& c) {
  std::vector<std::string> parts;
  auto coords = c.coords();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    std::string unit = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    parts.push_back(rational_term(coords[k], unit));
  }
  if (parts.empty()) return "0";
  return join_signed(parts);
}

std::string format(const Monomial& b) {
  std::vector<std::string> factors;
  auto add = [&](const char* name, int k) {
    if (k == 0) return;
    factors.push_back(k == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(k));
  };
  add("y", b.r);
  add("x", b.s);
  add("g", b.l);
  if (factors.empty()) return "1";
  std::string out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

std::string format(const Element& e) {
  std::vector<std::string> parts;
  for (const auto& [b, c] : e.terms()) {
    std::string unit = b == Monomial{0, 0, 0} ? "" : format(b);
    parts.push_back(scaled(c, unit));
  }
  if (parts.empty()) return "0";
  return join_signed(parts);
}

std::string format(const TensorElement& t) {
  std::vector<std::string> parts;
  for (const auto& [k, c] : t.terms()) {
    std::string unit = format(k.first) + " ⊗ " + format(k.second);
    if (c.is_one()) {
      parts.push_back(unit);
    } else {
      parts.push_back(scaled(c, "(" + unit + ")"));
    }
  }
  if (parts.empty()) return "0";
  return join_signed(parts);
}

}  // namespace radford
