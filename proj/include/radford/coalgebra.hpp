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

#include <functional>
#include <map>
#include <utility>

#include "radford/algebra.hpp"

namespace radford {

/// Sparse element of H (x) H over pairs of canonical monomials. Products
/// are componentwise, (a (x) b)(c (x) d) = ac (x) bd, with no braiding.
class TensorElement {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, Scalar>;

  explicit TensorElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  /// Pure tensor a (x) b.
  static TensorElement pure(const Element& a, const Element& b);

  const FieldContext& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void accumulate(const Monomial& left, const Monomial& right, const Scalar& c);

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Scalar& c, const TensorElement& t);
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.ctx_->same_as(*b.ctx_) && a.terms_ == b.terms_;
  }

 private:
  ContextPtr ctx_;
  Terms terms_;
};

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
TensorElement tensor_pow(const TensorElement& t, int k);

/// Swaps the legs.
TensorElement tensor_flip(const TensorElement& t);

enum class Linearity { Linear, ConjugateLinear };

/// Image of a single basis monomial under some map H -> H.
using MonomialMap = std::function<Element(const Monomial&)>;

/// Applies maps legwise. Both maps must share the given linearity; for
/// conjugate-linear maps each coefficient is conjugated once.
TensorElement tensor_map(const TensorElement& t, const MonomialMap& left,
                         const MonomialMap& right,
                         Linearity linearity = Linearity::Linear);

/// Gaussian binomial from the q-Pascal rule
/// [k, j]_q = [k-1, j-1]_q + q^j [k-1, j]_q,  [k, 0]_q = [k, k]_q = 1.
Scalar qbinom(int k, int j, const Scalar& q);

/// Coproduct and antipode on generators. The defaults are the Radford
/// structure maps; test fixtures may substitute corrupted images.
struct HopfData {
  TensorElement delta_g;
  TensorElement delta_x;
  TensorElement delta_y;
  Element antipode_g;
  Element antipode_x;
  Element antipode_y;

  static HopfData standard(const ContextPtr& ctx);
};

/// Delta(y^r x^s g^l) = Delta(y)^r Delta(x)^s Delta(g)^l, via tensor_mul.
TensorElement delta(const Monomial& b, const HopfData& data);
TensorElement delta(const Monomial& b, const ContextPtr& ctx);
TensorElement delta(const Element& e);
TensorElement delta(const Element& e, const HopfData& data);

/// Bases of the two Gaussian binomials in the closed coproduct formula,
/// as exponents of omega.
struct QBinomialBases {
  int y_exponent;
  int x_exponent;
};

/// Fitted against the multiplicative coproduct: Delta(y)^r expands with
/// Gaussian binomials in omega and Delta(x)^s with binomials in omega^-1,
/// because (y (x) g)(1 (x) y) = w (1 (x) y)(y (x) g) while
/// (x (x) g)(1 (x) x) = w^-1 (1 (x) x)(x (x) g).
inline constexpr QBinomialBases kResolvedBases{1, -1};

/// Closed double-sum coproduct of a monomial:
///   sum_{i<=r, j<=s} w^{-(r-i)j} [r,i]_{qy} [s,j]_{qx}
///       y^{r-i} x^{s-j} g^l (x) y^i x^j g^{l+s-j+r-i}.
TensorElement delta_closed(const ContextPtr& ctx, const Monomial& b,
                           QBinomialBases bases = kResolvedBases);
TensorElement delta_closed(const Element& e, QBinomialBases bases = kResolvedBases);

/// epsilon(y^r x^s g^l) = [r == s == 0].
Scalar counit(const Element& e);

/// S(y^r x^s g^l) = S(g)^l S(x)^s S(y)^r.
Element antipode(const Monomial& b, const HopfData& data);
Element antipode(const Monomial& b, const ContextPtr& ctx);
Element antipode(const Element& e);
Element antipode(const Element& e, const HopfData& data);

/// Least k >= 1 with S^k the identity on every basis monomial. Throws if
/// no such k is found below `limit`.
int antipode_order(const ContextPtr& ctx, int limit = 1000);

}  // namespace radford
