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
#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "radford/scalars.hpp"
#include "support.hpp"

using namespace radford;
using radford::testing::close;
using radford::testing::numeric;

namespace {

using IntPoly = std::vector<long>;

int mobius(int k) {
  int mu = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    mu = -mu;
  }
  return k > 1 ? -mu : mu;
}

IntPoly times(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division by a monic polynomial.
IntPoly divide(IntPoly a, const IntPoly& b) {
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  for (long r : a) EXPECT_EQ(r, 0);
  return q;
}

// Phi_m = prod_{d | m} (X^d - 1)^mu(m/d).
IntPoly mobius_cyclotomic(int m) {
  IntPoly num{1}, den{1};
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    int mu = mobius(m / d);
    if (mu == 1) num = times(num, f);
    if (mu == -1) den = times(den, f);
  }
  return divide(num, den);
}

int euler_phi(int m) {
  int count = 0;
  for (int k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
  return count;
}

}  // namespace

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-0/7")), "0");
  EXPECT_EQ(to_string(parse_rational("-12")), "-12");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Cyclotomic, MatchesMobiusProduct) {
  for (int m = 1; m <= 60; ++m) {
    IntPoly expected = mobius_cyclotomic(m);
    auto got = cyclotomic_polynomial(m);
    ASSERT_EQ(got.size(), expected.size()) << "m = " << m;
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(got[k], Rational(expected[k])) << m;
  }
}

TEST(FieldContext, DefaultConductor) {
  for (int n = 2; n <= 12; ++n) {
    auto ctx = FieldContext::make(n);
    EXPECT_EQ(ctx->m(), std::lcm(4, n));
    EXPECT_EQ(ctx->degree(), euler_phi(ctx->m()));
  }
  EXPECT_THROW(FieldContext::make(1), DomainError);
  EXPECT_THROW(FieldContext::make(3, 6), DomainError);
  EXPECT_THROW(FieldContext::make(4, 10), DomainError);
  EXPECT_EQ(FieldContext::make(3, 24)->degree(), 8);
}

TEST(Scalar, DistinguishedRoots) {
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    Scalar one(ctx, Rational(1));
    Scalar w = Scalar::omega(ctx);
    Scalar i = Scalar::imaginary_unit(ctx);
    EXPECT_TRUE(pow(w, n).is_one());
    for (int k = 1; k < n; ++k) EXPECT_FALSE(pow(w, k).is_one());
    EXPECT_EQ(i * i, -one);
    EXPECT_TRUE(pow(Scalar::zeta_power(ctx, 1), ctx->m()).is_one());
    EXPECT_TRUE(close(numeric(w), std::polar(1.0, 2 * std::numbers::pi / n)));
  }
}

TEST(Scalar, RootsOfUnityAreDistinctAndNormOne) {
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    auto roots = roots_of_unity(ctx);
    ASSERT_EQ(static_cast<int>(roots.size()), ctx->m());
    std::set<std::vector<Rational>> seen;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      seen.emplace(roots[k].coords().begin(), roots[k].coords().end());
      EXPECT_TRUE(is_norm_one(roots[k]));
      EXPECT_EQ(root_of_unity_exponent(roots[k]), static_cast<long>(k));
    }
    EXPECT_EQ(static_cast<int>(seen.size()), ctx->m());
    EXPECT_FALSE(root_of_unity_exponent(Scalar(ctx, Rational(2))));
  }
}

TEST(Scalar, FieldOperationsAgreeWithComplexEmbedding) {
  std::mt19937_64 rng(20260101);
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = radford::testing::random_scalar(ctx, rng);
      Scalar b = radford::testing::random_nonzero_scalar(ctx, rng);
      EXPECT_TRUE(close(numeric(a * b), numeric(a) * numeric(b)));
      EXPECT_TRUE(close(numeric(a + b), numeric(a) + numeric(b)));
      EXPECT_TRUE(close(numeric(conjugate(a)), std::conj(numeric(a))));
      EXPECT_TRUE(close(numeric(inv(b)), 1.0 / numeric(b)));
      EXPECT_TRUE((b * inv(b)).is_one());
      EXPECT_EQ(conjugate(conjugate(a)), a);
      EXPECT_EQ(conjugate(a * b), conjugate(a) * conjugate(b));
    }
  }
}

TEST(Scalar, RingAxiomsOnSamples) {
  std::mt19937_64 rng(77);
  auto ctx = FieldContext::make(5);
  for (int trial = 0; trial < 100; ++trial) {
    Scalar a = radford::testing::random_scalar(ctx, rng);
    Scalar b = radford::testing::random_scalar(ctx, rng);
    Scalar c = radford::testing::random_scalar(ctx, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Scalar, InverseOfZeroIsAnError) {
  auto ctx = FieldContext::make(3);
  EXPECT_THROW(inv(Scalar(ctx)), DomainError);
}

TEST(Scalar, MixedFieldsAreRejected) {
  auto a = Scalar(FieldContext::make(3), Rational(1));
  auto b = Scalar(FieldContext::make(4), Rational(1));
  EXPECT_THROW(a + b, DomainError);
}

TEST(Scalar, EmbedPreservesValue) {
  auto small = FieldContext::make(3);
  auto big = FieldContext::make(3, 24);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar a = radford::testing::random_scalar(small, rng);
    Scalar b = radford::testing::random_scalar(small, rng);
    EXPECT_TRUE(close(numeric(a.embed(big)), numeric(a)));
    EXPECT_EQ((a * b).embed(big), a.embed(big) * b.embed(big));
  }
  EXPECT_EQ(Scalar::omega(small).embed(big), Scalar::omega(big));
}

TEST(Scalar, SquareRootsOfRootsOfUnity) {
  for (int n : {3, 4, 6}) {
    auto ctx = FieldContext::make(n);
    for (const auto& r : roots_of_unity(ctx)) {
      auto [s, field] = sqrt_of_root_of_unity(r);
      EXPECT_EQ(s * s, r.embed(field));
      long k = *root_of_unity_exponent(r);
      EXPECT_EQ(field->m(), k % 2 == 0 ? ctx->m() : 2 * ctx->m());
    }
  }
  auto ctx = FieldContext::make(3);
  EXPECT_THROW(sqrt_of_root_of_unity(Scalar(ctx, Rational(2))), DomainError);
}
