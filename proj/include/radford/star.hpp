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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radford/coalgebra.hpp"

namespace radford {

/// Generator images of a conjugate-linear antimultiplicative map on H.
///
/// DiagonalPair and Matrix2 are validated on construction; RawImages
/// carries arbitrary images and exists so that invalid candidates can be
/// handed to verify_star_axioms.
class StarStructure {
 public:
  enum class Kind { DiagonalPair, Matrix2, RawImages };

  /// g* = g, x* = alpha x, y* = beta y; requires |alpha| = |beta| = 1.
  static StarStructure diagonal(const ContextPtr& ctx, const Scalar& alpha,
                                const Scalar& beta);
  /// n = 2 only: g* = g, x* = a11 x + a12 y, y* = a21 x + a22 y, with
  /// conj(A) A = I. Entries are row-major {a11, a12, a21, a22}.
  static StarStructure matrix(const ContextPtr& ctx, const std::array<Scalar, 4>& a);
  static StarStructure raw(Element g_image, Element x_image, Element y_image);

  Kind kind() const noexcept { return kind_; }
  const ContextPtr& context_ptr() const noexcept { return g_.context_ptr(); }
  const FieldContext& context() const noexcept { return g_.context(); }
  const Element& g_image() const noexcept { return g_; }
  const Element& x_image() const noexcept { return x_; }
  const Element& y_image() const noexcept { return y_; }
  /// Set for DiagonalPair.
  const std::optional<std::array<Scalar, 2>>& pair() const noexcept { return pair_; }
  /// Set for Matrix2.
  const std::optional<std::array<Scalar, 4>>& matrix_entries() const noexcept {
    return matrix_;
  }

  /// (y^r x^s g^l)* = (g*)^l (x*)^s (y*)^r.
  Element monomial_image(const Monomial& b) const;

  /// Moves the structure into a field extension with the same n.
  StarStructure embed(const ContextPtr& target) const;

 private:
  StarStructure(Kind kind, Element g, Element x, Element y)
      : kind_(kind), g_(std::move(g)), x_(std::move(x)), y_(std::move(y)) {}

  Kind kind_;
  Element g_;
  Element x_;
  Element y_;
  std::optional<std::array<Scalar, 2>> pair_;
  std::optional<std::array<Scalar, 4>> matrix_;
};

/// Conjugate-linear extension: sum c b -> sum conj(c) b*.
Element apply_star(const StarStructure& st, const Element& e);

struct Counterexample {
  /// The basis monomial (or ordered pair) where the two sides differ.
  std::vector<Monomial> at;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const noexcept;
  /// nullptr if no check has that name.
  const CheckResult* find(const std::string& name) const noexcept;
};

namespace check_names {
inline constexpr const char* kInvolution = "involution";
inline constexpr const char* kAntimultiplicative = "antimultiplicativity";
inline constexpr const char* kCoproduct = "coproduct_compatibility";
inline constexpr const char* kAntipodeStar = "antipode_star_involution";
inline constexpr const char* kCounitConjugate = "counit_conjugate";

inline constexpr const char* kCoassociativity = "coassociativity";
inline constexpr const char* kCounitLaw = "counit";
inline constexpr const char* kAntipodeLaw = "antipode";
inline constexpr const char* kBialgebra = "bialgebra_compatibility";
}  // namespace check_names

struct VerifyOptions {
  /// Binary laws run over every ordered basis pair unless this is set, in
  /// which case that many seeded random pairs are drawn instead.
  std::optional<std::size_t> pair_samples;
  std::uint64_t seed = 0x5eed2026ULL;

  /// Exhaustive for n <= 4, 2000 sampled pairs above.
  static VerifyOptions for_degree(int n);
};

/// The four defining conditions of a *-structure plus
/// epsilon(h*) = conj(epsilon(h)), each over the whole basis. All checks
/// are always run; the first counterexample of each failing check is kept.
VerificationReport verify_star_axioms(const StarStructure& st, const VerifyOptions& options = {});

/// Coassociativity, counit, antipode and bialgebra compatibility (which
/// includes multiplicativity of the counit) for the structure maps in
/// `data`.
VerificationReport verify_hopf_axioms(const ContextPtr& ctx, const HopfData& data,
                                      const VerifyOptions& options);
VerificationReport verify_hopf_axioms(const ContextPtr& ctx);

}  // namespace radford
