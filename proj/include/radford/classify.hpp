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

#include <array>
#include <optional>
#include <vector>

#include "radford/star.hpp"

namespace radford {

/// Hopf algebra automorphism fixing g, determined by the images of x and y.
///
/// Construction re-checks that the images satisfy the defining relations
/// and that Delta commutes with the map on generators.
class Automorphism {
 public:
  enum class Kind { Diagonal, Matrix2 };

  /// phi(x) = l1 x, phi(y) = l2 y, any n; both scalars nonzero.
  static Automorphism diagonal(const ContextPtr& ctx, const Scalar& l1, const Scalar& l2);
  /// n = 2 only: phi(x) = a11 x + a12 y, phi(y) = a21 x + a22 y, det != 0.
  static Automorphism matrix(const ContextPtr& ctx, const std::array<Scalar, 4>& lambda);

  Kind kind() const noexcept { return kind_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  /// Row-major {l11, l12, l21, l22}; off-diagonal zero for Diagonal.
  const std::array<Scalar, 4>& entries() const noexcept { return lambda_; }
  const Element& x_image() const noexcept { return x_; }
  const Element& y_image() const noexcept { return y_; }

  /// Inverse automorphism (inverse matrix).
  Automorphism inverse() const;

 private:
  Automorphism(Kind kind, ContextPtr ctx, std::array<Scalar, 4> lambda);

  Kind kind_;
  ContextPtr ctx_;
  std::array<Scalar, 4> lambda_;
  Element x_;
  Element y_;
};

/// Algebra-map extension: y^r x^s g^l -> phi(y)^r phi(x)^s g^l.
Element apply_automorphism(const Automorphism& phi, const Element& e);

/// phi(b^{*A}) == phi(b)^{*B} for every basis monomial b.
bool verify_equivalence(const Automorphism& phi, const StarStructure& a, const StarStructure& b);

/// For g* = g, x* = alpha x, y* = beta y with root-of-unity alpha, beta and
/// n > 2: phi = diag(l1, l2) with l1^2 = conj(alpha), l2^2 = conj(beta),
/// which carries the given structure onto x* = x, y* = y. The field is
/// extended to conductor 2m when a square root demands it; the returned
/// automorphism then lives in the extended field.
Automorphism equivalence_witness_diag(const StarStructure& st);

enum class Verdict { Equivalent, NotEquivalent, UnknownWithinBound };

struct EquivalenceResult {
  Verdict verdict = Verdict::UnknownWithinBound;
  std::optional<Automorphism> witness;
  int nullspace_dimension = 0;

  bool equivalent() const noexcept { return verdict == Verdict::Equivalent; }
};

/// n = 2: solves A Lambda = conj(Lambda) B over Q and searches the
/// solution space for an invertible Lambda by enumerating integer
/// combinations of the basis with coefficients in [-height, height],
/// smallest height first. A zero solution space means not equivalent;
/// exhausting the search is reported as UnknownWithinBound.
EquivalenceResult solve_equivalence_n2(const StarStructure& a, const StarStructure& b,
                                       int height = 3);

/// All m-th roots of unity together with 0.
std::vector<Scalar> default_grid(const ContextPtr& ctx);

/// Candidates g* = g^w (1 <= w < n) with x*, y* ranging over
/// grid-combinations of x, y and 1 - g^w. Each candidate that passes the
/// cheap necessary conditions on its x- and y-images alone
/// (g* x* = conj(w) x* g*, y* g* = conj(w) g* y*, (x*)^n = (y*)^n = 0 and
/// the generator coproduct rule) is run through verify_star_axioms; the
/// survivors are returned.
std::vector<StarStructure> scan_star_candidates(const ContextPtr& ctx,
                                                const std::vector<Scalar>& grid);

}  // namespace radford
