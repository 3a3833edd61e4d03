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
#include "radford/algebra.hpp"

#include <algorithm>

namespace radford {

namespace {

int mod(long a, int n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void check_same_algebra(const Element& a, const Element& b) {
  if (!a.context().same_as(b.context())) {
    throw DomainError("elements belong to different algebras");
  }
}

}  // namespace

std::vector<Monomial> basis(int n) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(n) * n * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int l = 0; l < n; ++l) out.push_back({r, s, l});
  return out;
}

Element Element::one(ContextPtr ctx) { return monomial(std::move(ctx), {0, 0, 0}); }

Element Element::constant(const Scalar& c) { return term(c, {0, 0, 0}); }

Element Element::monomial(ContextPtr ctx, Monomial b) {
  Scalar one(ctx, Rational(1));
  return term(one, b);
}

Element Element::term(const Scalar& c, Monomial b) {
  const int n = c.context().n();
  if (b.r < 0 || b.s < 0 || b.l < 0 || b.r >= n || b.s >= n || b.l >= n) {
    throw DomainError("monomial exponents must lie in [0, n)");
  }
  Element e(c.context_ptr());
  if (!c.is_zero()) e.terms_.emplace(b, c);
  return e;
}

Scalar Element::coefficient(const Monomial& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar(ctx_) : it->second;
}

void Element::accumulate(const Monomial& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& other) {
  check_same_algebra(*this, other);
  for (const auto& [b, c] : other.terms_) accumulate(b, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same_algebra(*this, other);
  for (const auto& [b, c] : other.terms_) accumulate(b, -c);
  return *this;
}

Element Element::operator-() const {
  Element out(*this);
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

int product_twist(const Monomial& a, const Monomial& b, int n) {
  // g^{l1} past y^{r2}: w^{l1 r2}; x^{s1} past y^{r2}: w^{s1 r2};
  // g^{l1} past x^{s2}: w^{-l1 s2}.
  return mod(static_cast<long>(a.l) * b.r + static_cast<long>(a.s) * b.r -
                 static_cast<long>(a.l) * b.s,
             n);
}

Element monomial_mul(const ContextPtr& ctx, const Monomial& a, const Monomial& b) {
  const int n = ctx->n();
  Element out(ctx);
  if (a.r + b.r >= n || a.s + b.s >= n) return out;
  Monomial prod{a.r + b.r, a.s + b.s, (a.l + b.l) % n};
  out.accumulate(prod, Scalar::omega_power(ctx, product_twist(a, b, n)));
  return out;
}

Element operator*(const Element& a, const Element& b) {
  check_same_algebra(a, b);
  const int n = a.context().n();
  Element out(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.r + mb.r >= n || ma.s + mb.s >= n) continue;
      Monomial prod{ma.r + mb.r, ma.s + mb.s, (ma.l + mb.l) % n};
      Scalar c = ca * cb;
      int e = product_twist(ma, mb, n);
      if (e != 0) c *= Scalar::omega_power(a.ctx_, e);
      out.accumulate(prod, c);
    }
  }
  return out;
}

Element operator*(const Scalar& c, const Element& e) {
  Element out(e.ctx_);
  if (c.is_zero()) return out;
  for (const auto& [b, v] : e.terms_) out.accumulate(b, c * v);
  return out;
}

Element scale(const Scalar& c, const Element& e) { return c * e; }

Element element_pow(const Element& e, int k) {
  if (k < 0) throw DomainError("negative exponent");
  Element result = Element::one(e.context_ptr());
  for (int i = 0; i < k; ++i) result = result * e;
  return result;
}

Element Element::embed(const ContextPtr& target) const {
  if (target->n() != ctx_->n()) throw DomainError("embedding must keep n fixed");
  Element out(target);
  for (const auto& [b, c] : terms_) out.accumulate(b, c.embed(target));
  return out;
}

std::vector<FreeWord::Letter> letters_of(const Monomial& b) {
  std::vector<FreeWord::Letter> out;
  out.insert(out.end(), b.r, FreeWord::Letter::Y);
  out.insert(out.end(), b.s, FreeWord::Letter::X);
  out.insert(out.end(), b.l, FreeWord::Letter::G);
  return out;
}

Element rewrite_word(const ContextPtr& ctx, const FreeWord& word) {
  using L = FreeWord::Letter;
  const int n = ctx->n();
  auto rank = [](L letter) {
    switch (letter) {
      case L::Y: return 0;
      case L::X: return 1;
      case L::G: return 2;
    }
    return 3;
  };
  std::vector<L> w = word.letters;
  long twist = 0;
  // Each swap removes one inversion with respect to Y < X < G.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (rank(w[i]) <= rank(w[i + 1])) continue;
      if (w[i] == L::X && w[i + 1] == L::Y) {
        twist += 1;  // XY = w YX
      } else if (w[i] == L::G && w[i + 1] == L::X) {
        twist -= 1;  // GX = w^-1 XG
      } else if (w[i] == L::G && w[i + 1] == L::Y) {
        twist += 1;  // GY = w YG
      }
      std::swap(w[i], w[i + 1]);
      changed = true;
    }
  }
  const int r = static_cast<int>(std::count(w.begin(), w.end(), L::Y));
  const int s = static_cast<int>(std::count(w.begin(), w.end(), L::X));
  const int l = static_cast<int>(std::count(w.begin(), w.end(), L::G));
  Element out(ctx);
  if (r >= n || s >= n) return out;
  Scalar c = word.coefficient * Scalar::omega_power(ctx, mod(twist, n));
  out.accumulate({r, s, l % n}, c);
  return out;
}

}  // namespace radford
