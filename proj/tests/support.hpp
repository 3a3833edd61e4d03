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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "radford/algebra.hpp"

namespace radford::testing {

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return Rational(num(rng), den(rng));
}

/// Each coordinate is zero with probability 1/2.
inline Scalar random_scalar(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::vector<Rational> c;
  std::bernoulli_distribution keep(0.5);
  for (int j = 0; j < ctx->degree(); ++j) c.push_back(keep(rng) ? random_rational(rng) : Rational(0));
  return Scalar(ctx, std::move(c));
}

inline Scalar random_nonzero_scalar(const ContextPtr& ctx, std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(ctx, rng);
    if (!s.is_zero()) return s;
  }
}

/// Up to `max_terms` random monomials with random coefficients.
inline Element random_element(const ContextPtr& ctx, std::mt19937_64& rng, int max_terms = 5) {
  const int n = ctx->n();
  std::uniform_int_distribution<int> exp(0, n - 1);
  std::uniform_int_distribution<int> count(0, max_terms);
  Element e(ctx);
  for (int k = count(rng); k > 0; --k) {
    e.accumulate({exp(rng), exp(rng), exp(rng)}, random_scalar(ctx, rng));
  }
  return e;
}

/// Numeric image of a scalar under zeta -> exp(2 pi i / m).
inline std::complex<double> numeric(const Scalar& s) {
  const int m = s.context().m();
  std::complex<double> out = 0;
  auto c = s.coords();
  for (std::size_t j = 0; j < c.size(); ++j) {
    out += c[j].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / m);
  }
  return out;
}

inline bool close(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) <= 1e-9 * (1 + std::abs(a) + std::abs(b));
}

// Rank by plain dense elimination, kept separate from the sparse solver.
inline int dense_rank(std::vector<std::vector<Scalar>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    Scalar pinv = inv(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c].is_zero()) continue;
      Scalar f = m[r][c] * pinv;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Whether v lies in the span of the rows (rank does not grow).
inline bool in_span(const std::vector<Element>& span, const Element& v) {
  const auto& ctx = v.context_ptr();
  const int n = ctx->n();
  auto row = [&](const Element& e) {
    std::vector<Scalar> r(n * n * n, Scalar(ctx));
    for (const auto& [b, c] : e.terms()) r[basis_index(b, n)] = c;
    return r;
  };
  std::vector<std::vector<Scalar>> m;
  for (const auto& e : span) m.push_back(row(e));
  int before = dense_rank(m);
  m.push_back(row(v));
  return dense_rank(m) == before;
}

}  // namespace radford::testing
