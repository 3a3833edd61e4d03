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

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radford {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Raised when an operation's precondition does not hold.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading '-'); the result is canonical.
Rational parse_rational(std::string_view text);

/// The cyclotomic field Q(zeta_m) together with the order n of the
/// distinguished root of unity omega = zeta^(m/n).
///
/// Scalars are stored in the power basis 1, zeta, ..., zeta^(phi(m)-1)
/// reduced modulo the m-th cyclotomic polynomial.
class FieldContext {
 public:
  /// n >= 2; m defaults to lcm(4, n) and must be divisible by both n and 4.
  static std::shared_ptr<const FieldContext> make(int n,
                                                  std::optional<int> m = {});

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  /// phi(m), the number of power-basis coordinates.
  int degree() const noexcept { return degree_; }
  /// Coefficients of Phi_m, lowest degree first; length degree() + 1.
  const std::vector<long>& cyclotomic() const noexcept { return phi_; }
  int omega_exponent() const noexcept { return m_ / n_; }
  int i_exponent() const noexcept { return m_ / 4; }

  /// Power-basis coordinates of zeta^k (k taken modulo m).
  const std::vector<Rational>& zeta_power(long k) const;

  /// Same field and same omega.
  bool same_as(const FieldContext& other) const noexcept {
    return n_ == other.n_ && m_ == other.m_;
  }

  FieldContext(int n, int m);

 private:
  int n_;
  int m_;
  int degree_;
  std::vector<long> phi_;
  std::vector<std::vector<Rational>> zeta_powers_;
};

using ContextPtr = std::shared_ptr<const FieldContext>;

/// Exact cyclotomic polynomial Phi_m, lowest degree first, obtained by
/// dividing X^m - 1 by Phi_d for every proper divisor d of m.
std::vector<Rational> cyclotomic_polynomial(int m);

/// An element of Q(zeta_m).
class Scalar {
 public:
  explicit Scalar(ContextPtr ctx);
  Scalar(ContextPtr ctx, Rational value);
  Scalar(ContextPtr ctx, std::vector<Rational> coords);

  static Scalar zeta_power(ContextPtr ctx, long k);
  static Scalar omega_power(ContextPtr ctx, long k);
  static Scalar omega(ContextPtr ctx) { return omega_power(std::move(ctx), 1); }
  static Scalar imaginary_unit(ContextPtr ctx);

  const FieldContext& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the value lies in Q (all non-constant coordinates vanish).
  bool is_rational() const noexcept;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Re-expresses this scalar in a field whose conductor is a multiple of
  /// ours, via zeta_m = zeta_M^(M/m).
  Scalar embed(const ContextPtr& target) const;

 private:
  ContextPtr ctx_;
  std::vector<Rational> coords_;
};

/// Throws DomainError on zero.
Scalar inv(const Scalar& a);
/// Negative exponents go through inv.
Scalar pow(const Scalar& a, long k);
/// The field automorphism zeta -> zeta^(m-1), i.e. complex conjugation.
Scalar conjugate(const Scalar& a);
/// a * conjugate(a) == 1.
bool is_norm_one(const Scalar& a);

/// k in [0, m) with a == zeta^k, if any.
std::optional<long> root_of_unity_exponent(const Scalar& a);

/// A square root of a root of unity. When the exponent is odd the root
/// lives in the field of conductor 2m, which is returned alongside it.
std::pair<Scalar, ContextPtr> sqrt_of_root_of_unity(const Scalar& a);

/// All m-th roots of unity, zeta^0 .. zeta^(m-1).
std::vector<Scalar> roots_of_unity(const ContextPtr& ctx);

}  // namespace radford
