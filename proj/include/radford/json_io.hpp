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

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "radford/classify.hpp"

namespace radford {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"n": n, "m": m}
Json to_json(const FieldContext& ctx);
ContextPtr context_from_json(const Json& j);

/// Array of phi(m) canonical "p/q" strings.
Json to_json(const Scalar& c);
Scalar scalar_from_json(const Json& j, const ContextPtr& ctx);

/// {"r": r, "s": s, "l": l}
Json to_json(const Monomial& b);
Monomial monomial_from_json(const Json& j, int n);

/// {"context": ..., "terms": [{"r", "s", "l", "coeff"}]} in (r, s, l) order.
Json to_json(const Element& e);
/// When `ctx` is given the embedded context must match it.
Element element_from_json(const Json& j, const ContextPtr& ctx = nullptr);

/// {"context": ..., "terms": [{"left", "right", "coeff"}]}
Json to_json(const TensorElement& t);

/// {"kind": "diag", "alpha", "beta"}, {"kind": "matrix2", "a": [4 scalars]}
/// or {"kind": "raw", "g", "x", "y"} with Element objects, each with a
/// "context" member. Validated kinds are re-validated on reading.
Json to_json(const StarStructure& st);
StarStructure star_from_json(const Json& j, const ContextPtr& ctx = nullptr);

/// {"checks": [{"name", "pass", "counterexample"?: {"at", "lhs", "rhs"}}]}
Json to_json(const VerificationReport& report);

/// {"kind": "diag" | "matrix2", "context", "lambda": [4 scalars]}
Json to_json(const Automorphism& phi);

/// {"equivalent": true | false | "unknown-within-bound", "witness"?,
///  "nullspace_dimension"}
Json to_json(const EquivalenceResult& result);

}  // namespace radford
