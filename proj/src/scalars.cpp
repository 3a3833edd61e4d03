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
#include "radford/scalars.hpp"

#include <limits>
#include <numeric>

namespace radford {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact quotient and remainder of a / b; b must be nonzero.
std::pair<Poly, Poly> divmod(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (sgn(a[k]) == 0) continue;
    Rational c = a[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(q);
  trim(a);
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void check_same_field(const Scalar& a, const Scalar& b) {
  if (a.context().m() != b.context().m()) {
    throw DomainError("scalars belong to different cyclotomic fields (m=" +
                      std::to_string(a.context().m()) + " vs m=" +
                      std::to_string(b.context().m()) + ")");
  }
}

// Reduces a coefficient buffer of any length modulo the monic Phi_m.
std::vector<Rational> reduce(std::vector<Rational> buf, const FieldContext& ctx) {
  const int d = ctx.degree();
  const auto& phi = ctx.cyclotomic();
  for (std::size_t k = buf.size(); k-- > static_cast<std::size_t>(d);) {
    if (sgn(buf[k]) == 0) continue;
    const Rational c = buf[k];
    const std::size_t base = k - d;
    for (int j = 0; j < d; ++j) {
      if (phi[j] == 0) continue;
      if (phi[j] == 1) {
        buf[base + j] -= c;
      } else if (phi[j] == -1) {
        buf[base + j] += c;
      } else {
        buf[base + j] -= c * phi[j];
      }
    }
    buf[k] = 0;
  }
  buf.resize(d);
  return buf;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && t[0] == '-') i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw DomainError("malformed rational '" + s + "'");
    return Rational(mpz_class(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw DomainError("malformed rational '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw DomainError("zero denominator in '" + s + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::vector<Rational> cyclotomic_polynomial(int m) {
  if (m < 1) throw DomainError("cyclotomic polynomial needs m >= 1");
  Poly p(m + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [q, r] = divmod(p, cyclotomic_polynomial(d));
    if (!r.empty()) throw std::logic_error("inexact cyclotomic division");
    p = std::move(q);
  }
  return p;
}

FieldContext::FieldContext(int n, int m) : n_(n), m_(m) {
  auto phi = cyclotomic_polynomial(m);
  degree_ = static_cast<int>(phi.size()) - 1;
  phi_.reserve(phi.size());
  for (const auto& c : phi) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw std::logic_error("cyclotomic coefficient out of range");
    phi_.push_back(c.get_num().get_si());
  }
  zeta_powers_.reserve(m);
  std::vector<Rational> cur(degree_);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    zeta_powers_.push_back(cur);
    std::vector<Rational> shifted(degree_ + 1);
    for (int j = 0; j < degree_; ++j) shifted[j + 1] = cur[j];
    cur = reduce(std::move(shifted), *this);
  }
}

ContextPtr FieldContext::make(int n, std::optional<int> m) {
  if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
  int conductor = m.value_or(std::lcm(4, n));
  if (conductor <= 0 || conductor % n != 0 || conductor % 4 != 0) {
    throw DomainError("conductor m=" + std::to_string(conductor) +
                      " must be a positive multiple of both n=" +
                      std::to_string(n) + " and 4");
  }
  return std::make_shared<const FieldContext>(n, conductor);
}

const std::vector<Rational>& FieldContext::zeta_power(long k) const {
  long r = k % m_;
  if (r < 0) r += m_;
  return zeta_powers_[static_cast<std::size_t>(r)];
}

Scalar::Scalar(ContextPtr ctx) : ctx_(std::move(ctx)), coords_(ctx_->degree()) {}

Scalar::Scalar(ContextPtr ctx, Rational value) : Scalar(std::move(ctx)) {
  coords_[0] = std::move(value);
}

Scalar::Scalar(ContextPtr ctx, std::vector<Rational> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(ctx_->degree())) {
    throw DomainError("scalar needs " + std::to_string(ctx_->degree()) +
                      " coordinates, got " + std::to_string(coords_.size()));
  }
  for (auto& c : coords_) c.canonicalize();
}

Scalar Scalar::zeta_power(ContextPtr ctx, long k) {
  auto coords = ctx->zeta_power(k);
  return Scalar(std::move(ctx), std::move(coords));
}

Scalar Scalar::omega_power(ContextPtr ctx, long k) {
  long e = static_cast<long>(ctx->omega_exponent()) * (k % ctx->n());
  return zeta_power(std::move(ctx), e);
}

Scalar Scalar::imaginary_unit(ContextPtr ctx) {
  long e = ctx->i_exponent();
  return zeta_power(std::move(ctx), e);
}

bool Scalar::is_zero() const noexcept {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Scalar::is_one() const noexcept {
  if (coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

bool Scalar::is_rational() const noexcept {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(other.coords_[i]) != 0) coords_[i] += other.coords_[i];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(other.coords_[i]) != 0) coords_[i] -= other.coords_[i];
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  const std::size_t d = a.coords_.size();
  // Products with a pure rational need no reduction.
  if (b.is_rational()) {
    Scalar out(a);
    if (b.coords_[0] == 1) return out;
    for (auto& c : out.coords_)
      if (sgn(c) != 0) c *= b.coords_[0];
    return out;
  }
  if (a.is_rational()) return b * a;
  std::vector<Rational> buf(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b.coords_[j]) == 0) continue;
      buf[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  Scalar out(a.ctx_);
  out.coords_ = reduce(std::move(buf), *a.ctx_);
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.ctx_->m() == b.ctx_->m() && a.coords_ == b.coords_;
}

Scalar Scalar::embed(const ContextPtr& target) const {
  const int m = ctx_->m();
  if (target->m() % m != 0) {
    throw DomainError("cannot embed Q(zeta_" + std::to_string(m) +
                      ") into Q(zeta_" + std::to_string(target->m()) + ")");
  }
  const long step = target->m() / m;
  Scalar out(target);
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (sgn(coords_[j]) == 0) continue;
    const auto& img = target->zeta_power(step * static_cast<long>(j));
    for (std::size_t k = 0; k < img.size(); ++k) {
      if (sgn(img[k]) != 0) out.coords_[k] += coords_[j] * img[k];
    }
  }
  return out;
}

Scalar inv(const Scalar& a) {
  if (a.is_zero()) throw DomainError("inverse of zero scalar");
  const auto& ctx = a.context();
  Poly phi(ctx.cyclotomic().begin(), ctx.cyclotomic().end());
  Poly r0 = phi, r1(a.coords().begin(), a.coords().end());
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_m is irreducible.
  Rational c = r1.at(0);
  for (auto& v : s1) v /= c;
  auto [q, rem] = divmod(s1, phi);
  rem.resize(ctx.degree());
  return Scalar(a.context_ptr(), std::move(rem));
}

Scalar pow(const Scalar& a, long k) {
  if (k < 0) return pow(inv(a), -k);
  Scalar result(a.context_ptr(), Rational(1));
  Scalar base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Scalar conjugate(const Scalar& a) {
  const auto& ctx = a.context();
  std::vector<Rational> out(ctx.degree());
  auto coords = a.coords();
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (sgn(coords[j]) == 0) continue;
    const auto& img = ctx.zeta_power(ctx.m() - static_cast<long>(j));
    for (std::size_t k = 0; k < img.size(); ++k) {
      if (sgn(img[k]) != 0) out[k] += coords[j] * img[k];
    }
  }
  return Scalar(a.context_ptr(), std::move(out));
}

bool is_norm_one(const Scalar& a) { return (a * conjugate(a)).is_one(); }

std::optional<long> root_of_unity_exponent(const Scalar& a) {
  const auto& ctx = a.context();
  for (long k = 0; k < ctx.m(); ++k) {
    if (std::equal(a.coords().begin(), a.coords().end(),
                   ctx.zeta_power(k).begin()))
      return k;
  }
  return std::nullopt;
}

std::pair<Scalar, ContextPtr> sqrt_of_root_of_unity(const Scalar& a) {
  auto k = root_of_unity_exponent(a);
  if (!k) throw DomainError("not a root of unity");
  if (*k % 2 == 0) return {Scalar::zeta_power(a.context_ptr(), *k / 2), a.context_ptr()};
  auto extended = FieldContext::make(a.context().n(), 2 * a.context().m());
  return {Scalar::zeta_power(extended, *k), extended};
}

std::vector<Scalar> roots_of_unity(const ContextPtr& ctx) {
  std::vector<Scalar> out;
  out.reserve(ctx->m());
  for (long k = 0; k < ctx->m(); ++k) out.push_back(Scalar::zeta_power(ctx, k));
  return out;
}

}  // namespace radford
