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
#include "radford/solver.hpp"

namespace radford {

namespace {

// Gauss-Jordan on sparse rows over any field. Ops supplies zero(), one(),
// is_zero(t) and inverse(t).
template <class T, class Ops>
std::vector<std::vector<T>> sparse_nullspace(const std::vector<std::map<std::size_t, T>>& input,
                                             std::size_t cols, const Ops& ops) {
  using Row = std::map<std::size_t, T>;
  std::map<std::size_t, Row> pivots;

  auto axpy = [&](Row& target, const T& factor, const Row& source) {
    for (const auto& [c, v] : source) {
      auto [it, inserted] = target.try_emplace(c, ops.zero());
      it->second -= factor * v;
      if (ops.is_zero(it->second)) target.erase(it);
    }
  };

  for (const auto& original : input) {
    Row row;
    for (const auto& [c, v] : original)
      if (!ops.is_zero(v)) row.emplace(c, v);
    // Eliminate known pivot columns in increasing order; subtracting a
    // pivot row only touches columns to the right of its pivot.
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      T factor = it->second;
      axpy(row, factor, p->second);
      it = row.upper_bound(col);
    }
    if (row.empty()) continue;
    const std::size_t lead = row.begin()->first;
    T scale = ops.inverse(row.begin()->second);
    for (auto& [c, v] : row) v = v * scale;
    pivots.emplace(lead, std::move(row));
  }

  // Back substitution to reduced row echelon form.
  for (auto p = pivots.rbegin(); p != pivots.rend(); ++p) {
    const std::size_t col = p->first;
    for (auto q = pivots.begin(); q != pivots.end() && q->first < col; ++q) {
      auto hit = q->second.find(col);
      if (hit == q->second.end()) continue;
      T factor = hit->second;
      axpy(q->second, factor, p->second);
    }
  }

  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivots.count(f)) continue;
    std::vector<T> v(cols, ops.zero());
    v[f] = ops.one();
    for (const auto& [p, row] : pivots) {
      auto hit = row.find(f);
      if (hit != row.end()) v[p] = -hit->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

struct ScalarOps {
  ContextPtr ctx;
  Scalar zero() const { return Scalar(ctx); }
  Scalar one() const { return Scalar(ctx, Rational(1)); }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static Scalar inverse(const Scalar& s) { return inv(s); }
};

struct RationalOps {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
  static Rational inverse(const Rational& q) { return 1 / q; }
};

}  // namespace

FieldMatrix::FieldMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, Scalar(ctx)) {}

std::vector<FieldVector> field_nullspace(const ContextPtr& ctx,
                                         const std::vector<SparseFieldRow>& rows,
                                         std::size_t cols) {
  return sparse_nullspace(rows, cols, ScalarOps{ctx});
}

std::vector<FieldVector> field_nullspace(const FieldMatrix& m) {
  std::vector<SparseFieldRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) rows[i].emplace(j, m.at(i, j));
  return field_nullspace(m.context_ptr(), rows, m.cols());
}

std::vector<Element> skew_primitive_space(const ContextPtr& ctx, int w) {
  const int n = ctx->n();
  if (w < 0 || w >= n) throw DomainError("w must lie in [0, n)");
  const auto monomials = basis(n);
  const auto data = HopfData::standard(ctx);
  const Element one = Element::one(ctx);
  const Element gw = Element::monomial(ctx, {0, 0, w});

  std::map<TensorElement::Key, SparseFieldRow> by_row;
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    Element h = Element::monomial(ctx, monomials[j]);
    TensorElement image = delta(monomials[j], data) - TensorElement::pure(h, gw) -
                          TensorElement::pure(one, h);
    for (const auto& [key, c] : image.terms()) by_row[key].emplace(j, c);
  }
  std::vector<SparseFieldRow> rows;
  rows.reserve(by_row.size());
  for (auto& [key, row] : by_row) rows.push_back(std::move(row));

  std::vector<Element> out;
  for (const auto& v : field_nullspace(ctx, rows, monomials.size())) {
    Element e(ctx);
    for (std::size_t j = 0; j < v.size(); ++j) e.accumulate(monomials[j], v[j]);
    out.push_back(std::move(e));
  }
  return out;
}

bool is_grouplike(const Element& e) {
  if (!counit(e).is_one()) return false;
  return delta(e) == TensorElement::pure(e, e);
}

std::vector<Scalar> ConjugateLinearSystem::evaluate(const std::vector<Scalar>& assignment) const {
  std::vector<Scalar> out;
  for (const auto& eq : equations) {
    Scalar r(ctx);
    for (const auto& [k, a] : eq.linear) r += a * assignment.at(k);
    for (const auto& [k, b] : eq.conjugated) r += b * conjugate(assignment.at(k));
    out.push_back(r);
  }
  return out;
}

RationalizedSystem rationalize(const ConjugateLinearSystem& system) {
  const auto& ctx = system.ctx;
  const std::size_t d = ctx->degree();
  RationalizedSystem out;
  out.ctx = ctx;
  out.scalar_unknowns = system.unknowns;
  out.degree = d;

  for (const auto& eq : system.equations) {
    std::vector<std::map<std::size_t, Rational>> block(d);
    auto add = [&](std::size_t unknown, const Scalar& image_of_basis, std::size_t j) {
      auto coords = image_of_basis.coords();
      for (std::size_t i = 0; i < d; ++i) {
        if (sgn(coords[i]) == 0) continue;
        auto [it, inserted] = block[i].try_emplace(unknown * d + j, Rational(0));
        it->second += coords[i];
        if (sgn(it->second) == 0) block[i].erase(it);
      }
    };
    for (std::size_t j = 0; j < d; ++j) {
      const long e = static_cast<long>(j);
      for (const auto& [k, a] : eq.linear) add(k, a * Scalar::zeta_power(ctx, e), j);
      // conj(zeta^j) = zeta^-j
      for (const auto& [k, b] : eq.conjugated) add(k, b * Scalar::zeta_power(ctx, -e), j);
    }
    for (auto& row : block) out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Scalar>> rational_nullspace(const RationalizedSystem& system) {
  std::vector<std::vector<Scalar>> out;
  const std::size_t d = system.degree;
  for (const auto& v : sparse_nullspace(system.rows, system.columns(), RationalOps{})) {
    std::vector<Scalar> assignment;
    for (std::size_t k = 0; k < system.scalar_unknowns; ++k) {
      assignment.emplace_back(system.ctx, std::vector<Rational>(v.begin() + k * d,
                                                                v.begin() + (k + 1) * d));
    }
    out.push_back(std::move(assignment));
  }
  return out;
}

}  // namespace radford
