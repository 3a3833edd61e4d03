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

#include "radford/star.hpp"
#include "support.hpp"

using namespace radford;

namespace {

Scalar q(const ContextPtr& ctx, long p, long d = 1) { return Scalar(ctx, Rational(p, d)); }

std::vector<std::string> failing(const VerificationReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

}  // namespace

TEST(StarStructure, DiagonalRootPairsPass) {
  for (int n = 2; n <= 4; ++n) {
    auto ctx = FieldContext::make(n);
    auto roots = roots_of_unity(ctx);
    for (std::size_t a = 0; a < roots.size(); a += 3) {
      for (std::size_t b = 0; b < roots.size(); b += 2) {
        auto report = verify_star_axioms(StarStructure::diagonal(ctx, roots[a], roots[b]));
        EXPECT_TRUE(report.all_passed()) << n << " " << a << " " << b;
        EXPECT_EQ(report.checks.size(), 5u);
      }
    }
  }
}

TEST(StarStructure, NormOneNonRootPasses) {
  auto ctx = FieldContext::make(4);
  Scalar i = Scalar::imaginary_unit(ctx);
  Scalar alpha = q(ctx, 3, 5) + q(ctx, 4, 5) * i;
  ASSERT_TRUE(is_norm_one(alpha));
  ASSERT_FALSE(root_of_unity_exponent(alpha));
  EXPECT_TRUE(verify_star_axioms(StarStructure::diagonal(ctx, alpha, conjugate(alpha))).all_passed());
}

TEST(StarStructure, DiagonalRejectsWrongModulus) {
  auto ctx = FieldContext::make(3);
  EXPECT_THROW(StarStructure::diagonal(ctx, q(ctx, 2), q(ctx, 1)), DomainError);
  EXPECT_THROW(StarStructure::diagonal(ctx, q(ctx, 1), q(ctx, 1, 2)), DomainError);
}

TEST(StarStructure, MatrixWitnessesPass) {
  auto ctx = FieldContext::make(2);
  Scalar o = q(ctx, 0), e = q(ctx, 1), i = Scalar::imaginary_unit(ctx);
  std::vector<std::array<Scalar, 4>> witnesses{
      {e, o, o, e}, {o, e, e, o}, {i, o, o, -i}, {o, q(ctx, 2), q(ctx, 1, 2), o}};
  for (const auto& a : witnesses) {
    auto st = StarStructure::matrix(ctx, a);
    EXPECT_TRUE(verify_star_axioms(st).all_passed());
  }
}

TEST(StarStructure, MatrixValidation) {
  auto ctx = FieldContext::make(2);
  Scalar o = q(ctx, 0), e = q(ctx, 1);
  try {
    StarStructure::matrix(ctx, {e, e, o, e});
    FAIL() << "expected rejection";
  } catch (const DomainError& err) {
    EXPECT_NE(std::string(err.what()).find("conj(A) A"), std::string::npos) << err.what();
  }
  auto c3 = FieldContext::make(3);
  EXPECT_THROW(StarStructure::matrix(c3, {q(c3, 1), q(c3, 0), q(c3, 0), q(c3, 1)}), DomainError);
}

TEST(StarStructure, ApplyIsConjugateLinear) {
  std::mt19937_64 rng(4);
  auto ctx = FieldContext::make(4);
  auto roots = roots_of_unity(ctx);
  auto st = StarStructure::diagonal(ctx, roots[1], roots[3]);
  for (int trial = 0; trial < 30; ++trial) {
    Scalar c = radford::testing::random_scalar(ctx, rng);
    Element a = radford::testing::random_element(ctx, rng, 4);
    Element b = radford::testing::random_element(ctx, rng, 4);
    EXPECT_EQ(apply_star(st, c * a + b), conjugate(c) * apply_star(st, a) + apply_star(st, b));
    EXPECT_EQ(apply_star(st, apply_star(st, a)), a);
    EXPECT_EQ(apply_star(st, a * b), apply_star(st, b) * apply_star(st, a));
  }
}

TEST(StarStructure, DoubledXFailsInvolution) {
  auto ctx = FieldContext::make(3);
  auto st = StarStructure::raw(Element::g(ctx), q(ctx, 2) * Element::x(ctx), Element::y(ctx));
  auto report = verify_star_axioms(st);
  const auto* inv = report.find(check_names::kInvolution);
  ASSERT_NE(inv, nullptr);
  EXPECT_FALSE(inv->pass);
  ASSERT_TRUE(inv->counterexample);
  EXPECT_EQ(inv->counterexample->at, (std::vector<Monomial>{Monomial{0, 1, 0}}));
  EXPECT_EQ(inv->counterexample->lhs, "4*x");
  EXPECT_EQ(inv->counterexample->rhs, "x");
}

TEST(StarStructure, SquaredGroupLikeCandidateFails) {
  auto ctx = FieldContext::make(3);
  Element g2 = Element::monomial(ctx, {0, 0, 2});
  Element shape = Element::one(ctx) - g2;
  auto report = verify_star_axioms(StarStructure::raw(g2, shape, shape));
  EXPECT_FALSE(report.all_passed());
  const auto* inv = report.find(check_names::kInvolution);
  ASSERT_FALSE(inv->pass);
  EXPECT_EQ(inv->counterexample->at, (std::vector<Monomial>{Monomial{0, 1, 0}}));
  for (const auto& c : report.checks) {
    if (!c.pass) EXPECT_TRUE(c.counterexample) << c.name;
  }
}

TEST(StarStructure, SampledVerificationIsDeterministic) {
  auto ctx = FieldContext::make(3);
  auto st = StarStructure::raw(Element::g(ctx), q(ctx, 2) * Element::x(ctx), Element::y(ctx));
  VerifyOptions opt;
  opt.pair_samples = 50;
  auto a = verify_star_axioms(st, opt);
  auto b = verify_star_axioms(st, opt);
  EXPECT_EQ(failing(a), failing(b));
  for (std::size_t k = 0; k < a.checks.size(); ++k) {
    ASSERT_EQ(a.checks[k].counterexample.has_value(), b.checks[k].counterexample.has_value());
    if (a.checks[k].counterexample) EXPECT_EQ(a.checks[k].counterexample->at, b.checks[k].counterexample->at);
  }
}

TEST(StarStructure, EmbedKeepsValidity) {
  auto ctx = FieldContext::make(3);
  auto big = FieldContext::make(3, 24);
  auto roots = roots_of_unity(ctx);
  auto st = StarStructure::diagonal(ctx, roots[5], roots[7]).embed(big);
  EXPECT_EQ(st.context().m(), 24);
  EXPECT_TRUE(verify_star_axioms(st).all_passed());
}
