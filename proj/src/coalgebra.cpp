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
#include "radford/coalgebra.hpp"

#include <vector>

namespace radford {

TensorElement TensorElement::pure(const Element& a, const Element& b) {
  if (!a.context().same_as(b.context())) throw DomainError("mismatched algebras");
  TensorElement out(a.context_ptr());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.accumulate(ma, mb, ca * cb);
  return out;
}

void TensorElement::accumulate(const Monomial& left, const Monomial& right,
                               const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  if (!ctx_->same_as(*other.ctx_)) throw DomainError("mismatched algebras");
  for (const auto& [k, c] : other.terms_) accumulate(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  if (!ctx_->same_as(*other.ctx_)) throw DomainError("mismatched algebras");
  for (const auto& [k, c] : other.terms_) accumulate(k.first, k.second, -c);
  return *this;
}

TensorElement operator*(const Scalar& c, const TensorElement& t) {
  TensorElement out(t.ctx_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : t.terms_) out.accumulate(k.first, k.second, c * v);
  return out;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  if (!a.context().same_as(b.context())) throw DomainError("mismatched algebras");
  const auto& ctx = a.context_ptr();
  const int n = ctx->n();
  TensorElement out(ctx);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const auto& [a1, a2] = ka;
      const auto& [b1, b2] = kb;
      if (a1.r + b1.r >= n || a1.s + b1.s >= n) continue;
      if (a2.r + b2.r >= n || a2.s + b2.s >= n) continue;
      Monomial left{a1.r + b1.r, a1.s + b1.s, (a1.l + b1.l) % n};
      Monomial right{a2.r + b2.r, a2.s + b2.s, (a2.l + b2.l) % n};
      int e = (product_twist(a1, b1, n) + product_twist(a2, b2, n)) % n;
      Scalar c = ca * cb;
      if (e != 0) c *= Scalar::omega_power(ctx, e);
      out.accumulate(left, right, c);
    }
  }
  return out;
}

TensorElement tensor_pow(const TensorElement& t, int k) {
  TensorElement out = TensorElement::pure(Element::one(t.context_ptr()),
                                          Element::one(t.context_ptr()));
  for (int i = 0; i < k; ++i) out = tensor_mul(out, t);
  return out;
}

TensorElement tensor_flip(const TensorElement& t) {
  TensorElement out(t.context_ptr());
  for (const auto& [k, c] : t.terms()) out.accumulate(k.second, k.first, c);
  return out;
}

TensorElement tensor_map(const TensorElement& t, const MonomialMap& left,
                         const MonomialMap& right, Linearity linearity) {
  TensorElement out(t.context_ptr());
  for (const auto& [k, c] : t.terms()) {
    Scalar coeff = linearity == Linearity::ConjugateLinear ? conjugate(c) : c;
    TensorElement image = TensorElement::pure(left(k.first), right(k.second));
    out += coeff * image;
  }
  return out;
}

Scalar qbinom(int k, int j, const Scalar& q) {
  if (j < 0 || j > k) {
    throw DomainError("qbinom needs 0 <= j <= k, got k=" + std::to_string(k) +
                      ", j=" + std::to_string(j));
  }
  const auto& ctx = q.context_ptr();
  // row[t] holds [row_index, t]_q.
  std::vector<Scalar> row{Scalar(ctx, Rational(1))};
  for (int kk = 1; kk <= k; ++kk) {
    std::vector<Scalar> next(kk + 1, Scalar(ctx));
    next[0] = Scalar(ctx, Rational(1));
    next[kk] = Scalar(ctx, Rational(1));
    for (int t = 1; t < kk; ++t) next[t] = row[t - 1] + pow(q, t) * row[t];
    row = std::move(next);
  }
  return row[j];
}

HopfData HopfData::standard(const ContextPtr& ctx) {
  const int n = ctx->n();
  Element one = Element::one(ctx), g = Element::g(ctx), x = Element::x(ctx),
          y = Element::y(ctx);
  Element g_inv = Element::monomial(ctx, {0, 0, n - 1});
  Scalar minus_one(ctx, Rational(-1));
  return HopfData{
      TensorElement::pure(g, g),
      TensorElement::pure(x, g) + TensorElement::pure(one, x),
      TensorElement::pure(y, g) + TensorElement::pure(one, y),
      g_inv,
      minus_one * (x * g_inv),
      minus_one * (y * g_inv),
  };
}

TensorElement delta(const Monomial& b, const HopfData& data) {
  return tensor_mul(tensor_mul(tensor_pow(data.delta_y, b.r), tensor_pow(data.delta_x, b.s)),
                    tensor_pow(data.delta_g, b.l));
}

TensorElement delta(const Monomial& b, const ContextPtr& ctx) {
  return delta(b, HopfData::standard(ctx));
}

TensorElement delta(const Element& e, const HopfData& data) {
  TensorElement out(e.context_ptr());
  for (const auto& [b, c] : e.terms()) out += c * delta(b, data);
  return out;
}

TensorElement delta(const Element& e) { return delta(e, HopfData::standard(e.context_ptr())); }

TensorElement delta_closed(const ContextPtr& ctx, const Monomial& b, QBinomialBases bases) {
  const int n = ctx->n();
  const Scalar qy = Scalar::omega_power(ctx, bases.y_exponent);
  const Scalar qx = Scalar::omega_power(ctx, bases.x_exponent);
  TensorElement out(ctx);
  for (int i = 0; i <= b.r; ++i) {
    for (int j = 0; j <= b.s; ++j) {
      Scalar c = Scalar::omega_power(ctx, -(b.r - i) * j) * qbinom(b.r, i, qy) *
                 qbinom(b.s, j, qx);
      Monomial left{b.r - i, b.s - j, b.l};
      Monomial right{i, j, (b.l + b.s - j + b.r - i) % n};
      out.accumulate(left, right, c);
    }
  }
  return out;
}

TensorElement delta_closed(const Element& e, QBinomialBases bases) {
  TensorElement out(e.context_ptr());
  for (const auto& [b, c] : e.terms()) out += c * delta_closed(e.context_ptr(), b, bases);
  return out;
}

Scalar counit(const Element& e) {
  Scalar out(e.context_ptr());
  for (const auto& [b, c] : e.terms())
    if (b.r == 0 && b.s == 0) out += c;
  return out;
}

Element antipode(const Monomial& b, const HopfData& data) {
  return element_pow(data.antipode_g, b.l) * element_pow(data.antipode_x, b.s) *
         element_pow(data.antipode_y, b.r);
}

Element antipode(const Monomial& b, const ContextPtr& ctx) {
  return antipode(b, HopfData::standard(ctx));
}

Element antipode(const Element& e, const HopfData& data) {
  Element out(e.context_ptr());
  for (const auto& [b, c] : e.terms()) out += c * antipode(b, data);
  return out;
}

Element antipode(const Element& e) { return antipode(e, HopfData::standard(e.context_ptr())); }

int antipode_order(const ContextPtr& ctx, int limit) {
  const int n = ctx->n();
  const auto monomials = basis(n);
  const auto data = HopfData::standard(ctx);
  std::vector<Element> table;
  table.reserve(monomials.size());
  for (const auto& b : monomials) table.push_back(antipode(b, data));

  auto apply = [&](const Element& e) {
    Element out(ctx);
    for (const auto& [b, c] : e.terms()) out += c * table[basis_index(b, n)];
    return out;
  };

  std::vector<Element> current = table;
  for (int k = 1; k <= limit; ++k) {
    bool identity = true;
    for (std::size_t i = 0; i < monomials.size() && identity; ++i) {
      identity = current[i] == Element::monomial(ctx, monomials[i]);
    }
    if (identity) return k;
    for (auto& e : current) e = apply(e);
  }
  throw DomainError("antipode order exceeds " + std::to_string(limit));
}

}  // namespace radford
