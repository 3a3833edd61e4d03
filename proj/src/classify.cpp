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
#include "radford/classify.hpp"

#include <cstdlib>

#include "radford/expr.hpp"
#include "radford/solver.hpp"

namespace radford {

namespace {

Scalar lift(const ContextPtr& ctx, const Scalar& s) {
  if (s.context().m() == ctx->m()) return Scalar(ctx, std::vector(s.coords().begin(), s.coords().end()));
  return s.embed(ctx);
}

// Generator-level Hopf map conditions for phi(g) = g.
void check_hopf_map(const ContextPtr& ctx, const Element& px, const Element& py) {
  const int n = ctx->n();
  const Element g = Element::g(ctx);
  const Element one = Element::one(ctx);
  const Scalar w = Scalar::omega(ctx);
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("not a Hopf algebra automorphism: ") + what);
  };
  require(px * g == w * (g * px), "phi(x) g != w g phi(x)");
  require(g * py == w * (py * g), "g phi(y) != w phi(y) g");
  require(px * py == w * (py * px), "phi(x) phi(y) != w phi(y) phi(x)");
  require(element_pow(px, n).is_zero(), "phi(x)^n != 0");
  require(element_pow(py, n).is_zero(), "phi(y)^n != 0");
  require(delta(px) == TensorElement::pure(px, g) + TensorElement::pure(one, px),
          "Delta(phi(x)) != (phi (x) phi) Delta(x)");
  require(delta(py) == TensorElement::pure(py, g) + TensorElement::pure(one, py),
          "Delta(phi(y)) != (phi (x) phi) Delta(y)");
}

std::array<Scalar, 4> matrix_of(const StarStructure& st) {
  if (st.matrix_entries()) return *st.matrix_entries();
  if (st.pair()) {
    const auto& ctx = st.context_ptr();
    return {(*st.pair())[0], Scalar(ctx), Scalar(ctx), (*st.pair())[1]};
  }
  throw DomainError("expected a validated 2x2 *-structure");
}

// Every vector of [-h, h]^dim with max |c_i| == h, lexicographic.
template <class F>
bool for_each_at_height(std::size_t dim, int h, F&& visit) {
  std::vector<int> c(dim, -h);
  for (;;) {
    bool on_shell = false;
    for (int v : c) on_shell = on_shell || std::abs(v) == h;
    if (on_shell && visit(c)) return true;
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (c[k] < h) {
        ++c[k];
        break;
      }
      c[k] = -h;
      if (k == 0) return false;
    }
    if (dim == 0) return false;
  }
}

}  // namespace

Automorphism::Automorphism(Kind kind, ContextPtr ctx, std::array<Scalar, 4> lambda)
    : kind_(kind),
      ctx_(std::move(ctx)),
      lambda_(std::move(lambda)),
      x_(lambda_[0] * Element::x(ctx_) + lambda_[1] * Element::y(ctx_)),
      y_(lambda_[2] * Element::x(ctx_) + lambda_[3] * Element::y(ctx_)) {
  Scalar det = lambda_[0] * lambda_[3] - lambda_[1] * lambda_[2];
  if (det.is_zero()) throw DomainError("automorphism matrix is singular");
  check_hopf_map(ctx_, x_, y_);
}

Automorphism Automorphism::diagonal(const ContextPtr& ctx, const Scalar& l1, const Scalar& l2) {
  if (l1.is_zero() || l2.is_zero()) throw DomainError("diagonal automorphism needs nonzero scalars");
  return Automorphism(Kind::Diagonal, ctx, {lift(ctx, l1), Scalar(ctx), Scalar(ctx), lift(ctx, l2)});
}

Automorphism Automorphism::matrix(const ContextPtr& ctx, const std::array<Scalar, 4>& lambda) {
  if (ctx->n() != 2) {
    throw DomainError("matrix automorphisms mixing x and y need n = 2 (got n = " +
                      std::to_string(ctx->n()) + ")");
  }
  return Automorphism(Kind::Matrix2, ctx,
                      {lift(ctx, lambda[0]), lift(ctx, lambda[1]), lift(ctx, lambda[2]),
                       lift(ctx, lambda[3])});
}

Automorphism Automorphism::inverse() const {
  const auto& l = lambda_;
  Scalar d = inv(l[0] * l[3] - l[1] * l[2]);
  std::array<Scalar, 4> m{d * l[3], -(d * l[1]), -(d * l[2]), d * l[0]};
  return Automorphism(kind_, ctx_, std::move(m));
}

Element apply_automorphism(const Automorphism& phi, const Element& e) {
  const auto& ctx = phi.context_ptr();
  Element src = e.context().same_as(*ctx) ? e : e.embed(ctx);
  Element out(ctx);
  for (const auto& [b, c] : src.terms()) {
    out += c * (element_pow(phi.y_image(), b.r) * element_pow(phi.x_image(), b.s) *
                Element::monomial(ctx, {0, 0, b.l}));
  }
  return out;
}

bool verify_equivalence(const Automorphism& phi, const StarStructure& a, const StarStructure& b) {
  ContextPtr ctx = phi.context_ptr();
  for (const auto* st : {&a, &b}) {
    if (st->context().m() > ctx->m()) ctx = st->context_ptr();
  }
  auto to_ctx = [&](const StarStructure& st) {
    return st.context().same_as(*ctx) ? st : st.embed(ctx);
  };
  const StarStructure sa = to_ctx(a), sb = to_ctx(b);
  const Automorphism& p = phi;
  if (!p.context_ptr()->same_as(*ctx)) {
    // Lift the automorphism by rebuilding it over the larger field.
    auto e = p.entries();
    std::array<Scalar, 4> lifted{e[0].embed(ctx), e[1].embed(ctx), e[2].embed(ctx), e[3].embed(ctx)};
    Automorphism q = p.kind() == Automorphism::Kind::Diagonal
                         ? Automorphism::diagonal(ctx, lifted[0], lifted[3])
                         : Automorphism::matrix(ctx, lifted);
    return verify_equivalence(q, sa, sb);
  }
  for (const auto& m : basis(ctx->n())) {
    Element h = Element::monomial(ctx, m);
    if (!(apply_automorphism(p, apply_star(sa, h)) == apply_star(sb, apply_automorphism(p, h))))
      return false;
  }
  return true;
}

Automorphism equivalence_witness_diag(const StarStructure& st) {
  if (!st.pair()) throw DomainError("expected a diagonal *-structure");
  if (st.context().n() <= 2) {
    throw DomainError("diagonal witnesses are for n > 2; use the n = 2 matrix solver");
  }
  const auto& [alpha, beta] = *st.pair();
  if (!root_of_unity_exponent(alpha)) throw DomainError("alpha is not a root of unity");
  if (!root_of_unity_exponent(beta)) throw DomainError("beta is not a root of unity");
  auto [l1, c1] = sqrt_of_root_of_unity(conjugate(alpha));
  auto [l2, c2] = sqrt_of_root_of_unity(conjugate(beta));
  ContextPtr ctx = c1->m() >= c2->m() ? c1 : c2;
  if (!ctx->same_as(*st.context_ptr()) && ctx->n() != st.context().n()) {
    ctx = FieldContext::make(st.context().n(), ctx->m());
  }
  Automorphism phi = Automorphism::diagonal(ctx, lift(ctx, l1), lift(ctx, l2));
  auto identity = StarStructure::diagonal(st.context_ptr(), Scalar(st.context_ptr(), Rational(1)),
                                          Scalar(st.context_ptr(), Rational(1)));
  if (!verify_equivalence(phi, st, identity)) {
    throw std::logic_error("constructed diagonal witness failed verification");
  }
  return phi;
}

EquivalenceResult solve_equivalence_n2(const StarStructure& a, const StarStructure& b, int height) {
  const auto& ctx = a.context_ptr();
  if (ctx->n() != 2) throw DomainError("the matrix equivalence solver needs n = 2");
  if (!b.context().same_as(*ctx)) throw DomainError("structures live in different fields");
  const auto A = matrix_of(a);
  const auto B = matrix_of(b);

  // (A L)_{ij} - (conj(L) B)_{ij} = 0 with L_{kj} at index 2k + j.
  ConjugateLinearSystem system{ctx, 4, {}};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      ConjugateLinearSystem::Equation eq;
      for (std::size_t k = 0; k < 2; ++k) {
        eq.linear.emplace_back(2 * k + j, A[2 * i + k]);
        eq.conjugated.emplace_back(2 * i + k, -B[2 * k + j]);
      }
      system.equations.push_back(std::move(eq));
    }
  }
  const auto solutions = rational_nullspace(rationalize(system));

  EquivalenceResult result;
  result.nullspace_dimension = static_cast<int>(solutions.size());
  if (solutions.empty()) {
    result.verdict = Verdict::NotEquivalent;
    return result;
  }
  for (int h = 1; h <= height; ++h) {
    bool found = for_each_at_height(solutions.size(), h, [&](const std::vector<int>& c) {
      std::array<Scalar, 4> lambda{Scalar(ctx), Scalar(ctx), Scalar(ctx), Scalar(ctx)};
      for (std::size_t t = 0; t < c.size(); ++t) {
        if (c[t] == 0) continue;
        Scalar k(ctx, Rational(c[t]));
        for (std::size_t e = 0; e < 4; ++e) lambda[e] += k * solutions[t][e];
      }
      if ((lambda[0] * lambda[3] - lambda[1] * lambda[2]).is_zero()) return false;
      Automorphism phi = Automorphism::matrix(ctx, lambda);
      if (!verify_equivalence(phi, a, b)) {
        throw std::logic_error("solution of A L = conj(L) B failed verification");
      }
      result.verdict = Verdict::Equivalent;
      result.witness = std::move(phi);
      return true;
    });
    if (found) return result;
  }
  result.verdict = Verdict::UnknownWithinBound;
  return result;
}

std::vector<Scalar> default_grid(const ContextPtr& ctx) {
  std::vector<Scalar> grid{Scalar(ctx)};
  for (auto& r : roots_of_unity(ctx)) grid.push_back(std::move(r));
  return grid;
}

std::vector<StarStructure> scan_star_candidates(const ContextPtr& ctx,
                                                const std::vector<Scalar>& grid) {
  const int n = ctx->n();
  const Element one = Element::one(ctx);
  const Element x = Element::x(ctx), y = Element::y(ctx);
  const Scalar w = Scalar::omega(ctx);
  const Scalar w_inv = Scalar::omega_power(ctx, -1);
  std::vector<Scalar> values;
  for (const auto& s : grid) values.push_back(lift(ctx, s));

  std::vector<StarStructure> survivors;
  for (int k = 1; k < n; ++k) {
    const Element gk = Element::monomial(ctx, {0, 0, k});
    const Element shape = one - gk;
    std::vector<Element> combos;
    for (const auto& a : values)
      for (const auto& b : values)
        for (const auto& c : values) combos.push_back(a * x + b * y + c * shape);

    auto coproduct_ok = [&](const Element& img) {
      return delta(img) == TensorElement::pure(img, gk) + TensorElement::pure(one, img);
    };
    std::vector<const Element*> x_images, y_images;
    for (const auto& img : combos) {
      if (!element_pow(img, n).is_zero() || !coproduct_ok(img)) continue;
      // Images of the relations gx = w^-1 xg and gy = w yg.
      if (w * (gk * img) == img * gk) x_images.push_back(&img);
      if (w_inv * (gk * img) == img * gk) y_images.push_back(&img);
    }
    for (const auto* xi : x_images) {
      for (const auto* yi : y_images) {
        auto candidate = StarStructure::raw(gk, *xi, *yi);
        if (verify_star_axioms(candidate).all_passed()) survivors.push_back(std::move(candidate));
      }
    }
  }
  return survivors;
}

}  // namespace radford
