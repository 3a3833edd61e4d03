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
#include "radford/json_io.hpp"

namespace radford {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing member \"") + key + "\"");
  return *it;
}

int small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<int>();
}

ContextPtr resolve_context(const Json& j, const ContextPtr& expected) {
  ContextPtr ctx = context_from_json(member(j, "context"));
  if (!expected) return ctx;
  if (ctx->n() != expected->n() || ctx->m() != expected->m()) {
    throw FormatError("file context (n = " + std::to_string(ctx->n()) +
                      ", m = " + std::to_string(ctx->m()) + ") does not match (n = " +
                      std::to_string(expected->n()) + ", m = " + std::to_string(expected->m()) +
                      ")");
  }
  return expected;
}

}  // namespace

Json to_json(const FieldContext& ctx) { return Json{{"n", ctx.n()}, {"m", ctx.m()}}; }

ContextPtr context_from_json(const Json& j) {
  int n = small_int(member(j, "n"), "n");
  int m = small_int(member(j, "m"), "m");
  try {
    return FieldContext::make(n, m);
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const Scalar& c) {
  Json out = Json::array();
  for (const auto& q : c.coords()) out.push_back(to_string(q));
  return out;
}

Scalar scalar_from_json(const Json& j, const ContextPtr& ctx) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(ctx->degree())) {
    throw FormatError("a scalar must be an array of " + std::to_string(ctx->degree()) +
                      " rational strings");
  }
  std::vector<Rational> coords;
  for (const auto& q : j) {
    if (!q.is_string()) throw FormatError("scalar coordinates must be strings");
    try {
      coords.push_back(parse_rational(q.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  return Scalar(ctx, std::move(coords));
}

Json to_json(const Monomial& b) { return Json{{"r", b.r}, {"s", b.s}, {"l", b.l}}; }

Monomial monomial_from_json(const Json& j, int n) {
  Monomial b{small_int(member(j, "r"), "r"), small_int(member(j, "s"), "s"),
             small_int(member(j, "l"), "l")};
  for (int e : {b.r, b.s, b.l})
    if (e < 0 || e >= n) throw FormatError("monomial exponent out of range [0, n)");
  return b;
}

Json to_json(const Element& e) {
  Json terms = Json::array();
  for (const auto& [b, c] : e.terms()) {
    terms.push_back(Json{{"r", b.r}, {"s", b.s}, {"l", b.l}, {"coeff", to_json(c)}});
  }
  return Json{{"context", to_json(e.context())}, {"terms", std::move(terms)}};
}

Element element_from_json(const Json& j, const ContextPtr& expected) {
  ContextPtr ctx = resolve_context(j, expected);
  const Json& terms = member(j, "terms");
  if (!terms.is_array()) throw FormatError("\"terms\" must be an array");
  Element out(ctx);
  for (const auto& t : terms) {
    out.accumulate(monomial_from_json(t, ctx->n()), scalar_from_json(member(t, "coeff"), ctx));
  }
  return out;
}

Json to_json(const TensorElement& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    terms.push_back(
        Json{{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", to_json(c)}});
  }
  return Json{{"context", to_json(t.context())}, {"terms", std::move(terms)}};
}

Json to_json(const StarStructure& st) {
  Json out{{"context", to_json(st.context())}};
  switch (st.kind()) {
    case StarStructure::Kind::DiagonalPair:
      out["kind"] = "diag";
      out["alpha"] = to_json((*st.pair())[0]);
      out["beta"] = to_json((*st.pair())[1]);
      break;
    case StarStructure::Kind::Matrix2: {
      out["kind"] = "matrix2";
      Json a = Json::array();
      for (const auto& c : *st.matrix_entries()) a.push_back(to_json(c));
      out["a"] = std::move(a);
      break;
    }
    case StarStructure::Kind::RawImages:
      out["kind"] = "raw";
      out["g"] = to_json(st.g_image());
      out["x"] = to_json(st.x_image());
      out["y"] = to_json(st.y_image());
      break;
  }
  return out;
}

StarStructure star_from_json(const Json& j, const ContextPtr& expected) {
  ContextPtr ctx = resolve_context(j, expected);
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) throw FormatError("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "diag") {
      return StarStructure::diagonal(ctx, scalar_from_json(member(j, "alpha"), ctx),
                                     scalar_from_json(member(j, "beta"), ctx));
    }
    if (k == "matrix2") {
      const Json& a = member(j, "a");
      if (!a.is_array() || a.size() != 4) throw FormatError("\"a\" must hold 4 scalars");
      return StarStructure::matrix(
          ctx, {scalar_from_json(a[0], ctx), scalar_from_json(a[1], ctx),
                scalar_from_json(a[2], ctx), scalar_from_json(a[3], ctx)});
    }
    if (k == "raw") {
      return StarStructure::raw(element_from_json(member(j, "g"), ctx),
                                element_from_json(member(j, "x"), ctx),
                                element_from_json(member(j, "y"), ctx));
    }
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown star structure kind \"" + k + "\"");
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (c.counterexample) {
      Json at = Json::array();
      for (const auto& b : c.counterexample->at) at.push_back(to_json(b));
      entry["counterexample"] =
          Json{{"at", std::move(at)}, {"lhs", c.counterexample->lhs}, {"rhs", c.counterexample->rhs}};
    }
    checks.push_back(std::move(entry));
  }
  return Json{{"checks", std::move(checks)}};
}

Json to_json(const Automorphism& phi) {
  Json lambda = Json::array();
  for (const auto& c : phi.entries()) lambda.push_back(to_json(c));
  return Json{{"kind", phi.kind() == Automorphism::Kind::Diagonal ? "diag" : "matrix2"},
              {"context", to_json(*phi.context_ptr())},
              {"lambda", std::move(lambda)}};
}

Json to_json(const EquivalenceResult& result) {
  Json out;
  switch (result.verdict) {
    case Verdict::Equivalent:
      out["equivalent"] = true;
      break;
    case Verdict::NotEquivalent:
      out["equivalent"] = false;
      break;
    case Verdict::UnknownWithinBound:
      out["equivalent"] = "unknown-within-bound";
      break;
  }
  if (result.witness) out["witness"] = to_json(*result.witness);
  out["nullspace_dimension"] = result.nullspace_dimension;
  return out;
}

}  // namespace radford
