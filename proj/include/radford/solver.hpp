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

#include <cstddef>
#include <map>
#include <vector>

#include "radford/coalgebra.hpp"

namespace radford {

/// Dense matrix over Q(zeta_m).
class FieldMatrix {
 public:
  FieldMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  ContextPtr ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

using FieldVector = std::vector<Scalar>;
using SparseFieldRow = std::map<std::size_t, Scalar>;

/// Basis of the right nullspace read off the reduced row echelon form:
/// one vector per free column, in increasing column order, with a 1 in
/// that column. The echelon form is unique, so the output is too.
std::vector<FieldVector> field_nullspace(const FieldMatrix& m);
std::vector<FieldVector> field_nullspace(const ContextPtr& ctx,
                                         const std::vector<SparseFieldRow>& rows,
                                         std::size_t cols);

/// Basis of { h : Delta(h) = h (x) g^w + 1 (x) h }, found as the nullspace
/// of h -> Delta(h) - h (x) g^w - 1 (x) h on the n^3 coordinates of h.
std::vector<Element> skew_primitive_space(const ContextPtr& ctx, int w);

/// Delta(e) == e (x) e and epsilon(e) == 1.
bool is_grouplike(const Element& e);

/// Equations sum_k a_k u_k + sum_k b_k conj(u_k) = 0 in scalar unknowns u_k.
struct ConjugateLinearSystem {
  struct Equation {
    std::vector<std::pair<std::size_t, Scalar>> linear;
    std::vector<std::pair<std::size_t, Scalar>> conjugated;
  };

  ContextPtr ctx;
  std::size_t unknowns = 0;
  std::vector<Equation> equations;

  /// Residual of each equation at the given assignment.
  std::vector<Scalar> evaluate(const std::vector<Scalar>& assignment) const;
};

/// The same system over Q: every scalar unknown becomes phi(m) rational
/// coordinates and conjugation becomes its exact power-basis matrix.
struct RationalizedSystem {
  std::size_t scalar_unknowns = 0;
  std::size_t degree = 0;  // phi(m)
  std::vector<std::map<std::size_t, Rational>> rows;
  ContextPtr ctx;

  std::size_t columns() const noexcept { return scalar_unknowns * degree; }
};

RationalizedSystem rationalize(const ConjugateLinearSystem& system);

/// Q-basis of the solution space, each vector turned back into scalar
/// assignments for the original unknowns.
std::vector<std::vector<Scalar>> rational_nullspace(const RationalizedSystem& system);

}  // namespace radford
