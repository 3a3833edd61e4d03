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

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "radford/scalars.hpp"

namespace radford {

/// Canonical basis word y^r x^s g^l with 0 <= r, s, l < n.
struct Monomial {
  int r = 0;
  int s = 0;
  int l = 0;

  auto operator<=>(const Monomial&) const = default;
};

/// Position of a monomial in the lexicographic (r, s, l) enumeration.
inline std::size_t basis_index(const Monomial& b, int n) {
  return (static_cast<std::size_t>(b.r) * n + b.s) * n + b.l;
}

/// All n^3 canonical monomials in lexicographic (r, s, l) order.
std::vector<Monomial> basis(int n);

/// A sparse linear combination of canonical monomials. No stored
/// coefficient is ever zero, so equality is plain map equality.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit Element(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Element zero(ContextPtr ctx) { return Element(std::move(ctx)); }
  static Element one(ContextPtr ctx);
  static Element constant(const Scalar& c);
  static Element monomial(ContextPtr ctx, Monomial b);
  static Element term(const Scalar& c, Monomial b);
  static Element g(ContextPtr ctx) { return monomial(std::move(ctx), {0, 0, 1}); }
  static Element x(ContextPtr ctx) { return monomial(std::move(ctx), {0, 1, 0}); }
  static Element y(ContextPtr ctx) { return monomial(std::move(ctx), {1, 0, 0}); }

  const FieldContext& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of b (zero when absent).
  Scalar coefficient(const Monomial& b) const;

  /// Adds c * b in place, dropping the entry if it cancels.
  void accumulate(const Monomial& b, const Scalar& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, const Element& e);
  friend bool operator==(const Element& a, const Element& b) {
    return a.ctx_->same_as(*b.ctx_) && a.terms_ == b.terms_;
  }

  /// Re-expresses the element over a field extension with the same omega.
  Element embed(const ContextPtr& target) const;

 private:
  ContextPtr ctx_;
  Terms terms_;
};

/// Exponent e with y^{r1} x^{s1} g^{l1} * y^{r2} x^{s2} g^{l2}
/// = omega^e y^{r1+r2} x^{s1+s2} g^{l1+l2}, reduced into [0, n).
int product_twist(const Monomial& a, const Monomial& b, int n);

/// Product of two basis monomials: zero, or a single twisted term.
Element monomial_mul(const ContextPtr& ctx, const Monomial& a, const Monomial& b);

Element scale(const Scalar& c, const Element& e);
Element element_pow(const Element& e, int k);

/// A word in the free algebra on G, X, Y with a scalar coefficient.
struct FreeWord {
  enum class Letter { G, X, Y };
  std::vector<Letter> letters;
  Scalar coefficient;
};

/// Letter expansion y..y x..x g..g of a canonical monomial.
std::vector<FreeWord::Letter> letters_of(const Monomial& b);

/// Normal form of a free word by rewriting with
///   XY -> w YX,  GX -> w^-1 XG,  GY -> w YG,  G^n -> 1,  X^n -> 0,  Y^n -> 0.
/// Independent of the closed-form product; kept as its oracle.
Element rewrite_word(const ContextPtr& ctx, const FreeWord& word);

}  // namespace radford
