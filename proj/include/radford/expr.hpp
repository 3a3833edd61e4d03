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
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "radford/coalgebra.hpp"

namespace radford {

/// Parse tree for the element grammar
///
///   expr   := term (('+' | '-') term)*
///   term   := '-'? factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := 'g' | 'x' | 'y' | 'i' | 'w' | 'z' | rational | '(' expr ')'
///   rational := int ('/' posint)?
///
/// 'w' is omega = zeta^(m/n), 'z' is zeta_m and 'i' is zeta^(m/4).
/// Multiplication must be written explicitly.
struct Expr {
  struct Atom {
    char symbol;  // one of g x y i w z, or 'q' for a rational literal
    Rational value;
  };
  struct Power {
    std::unique_ptr<Expr> base;
    unsigned long exponent;
  };
  struct Product {
    bool negated = false;
    std::vector<Expr> factors;
  };
  struct Sum {
    // Each term carries its own sign (true = subtracted).
    std::vector<std::pair<bool, Expr>> terms;
  };

  std::variant<Atom, Power, Product, Sum> node;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

Expr parse(std::string_view input);
Element evaluate(const Expr& expr, const ContextPtr& ctx);
/// parse + evaluate.
Element parse_element(std::string_view input, const ContextPtr& ctx);
/// Like parse_element but the result must be a multiple of 1.
Scalar parse_scalar(std::string_view input, const ContextPtr& ctx);

/// "(a0 + a1*z + ...)" without the parentheses; "0" for zero.
std::string format(const Scalar& c);
/// "y^r*x^s*g^l" with unit factors dropped; "1" for the unit monomial.
std::string format(const Monomial& b);
/// Deterministic text in lexicographic (r, s, l) term order, readable back
/// by parse_element.
std::string format(const Element& e);
std::string format(const TensorElement& t);

}  // namespace radford
