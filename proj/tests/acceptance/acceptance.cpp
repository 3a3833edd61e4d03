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
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "../cli_support.hpp"
#include "../support.hpp"
#include "radford/expr.hpp"
#include "radford/json_io.hpp"
#include "radford/solver.hpp"

using namespace radford;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

Scalar q(const ContextPtr& ctx, long p, long d = 1) { return Scalar(ctx, Rational(p, d)); }

std::vector<StarStructure> witness_matrices(const ContextPtr& ctx) {
  Scalar o = q(ctx, 0), e = q(ctx, 1), i = Scalar::imaginary_unit(ctx);
  return {StarStructure::matrix(ctx, {e, o, o, e}), StarStructure::matrix(ctx, {o, e, e, o}),
          StarStructure::matrix(ctx, {i, o, o, -i}),
          StarStructure::matrix(ctx, {o, q(ctx, 2), q(ctx, 1, 2), o})};
}

void hopf_axioms(Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    auto report = verify_hopf_axioms(ctx, HopfData::standard(ctx), VerifyOptions::for_degree(n));
    for (const auto& c : report.checks)
      if (!c.pass) o.fail("n=" + std::to_string(n) + " " + c.name);
  }
  o.detail << (o.pass ? "n=2..6, exhaustive pairs for n<=4, 2000 seeded pairs for n=5,6" : "");
}

void antipode_order_check(Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    int k = antipode_order(ctx);
    if (k != 2 * n) o.fail("n=" + std::to_string(n) + " order " + std::to_string(k));
    Scalar w = Scalar::omega(ctx);
    Element x = Element::x(ctx), y = Element::y(ctx);
    if (!(antipode(antipode(x)) == pow(w, -1) * x)) o.fail("S^2(x) at n=" + std::to_string(n));
    if (!(antipode(antipode(y)) == w * y)) o.fail("S^2(y) at n=" + std::to_string(n));
  }
  if (o.pass) o.detail << "order 2n and S^2 scaling for n=2..6";
}

void closed_coproduct(Outcome& o) {
  int total = 0, bad = 0;
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    for (const auto& b : basis(n)) {
      ++total;
      if (!(delta_closed(ctx, b) == delta(b, ctx))) ++bad;
    }
  }
  if (bad) o.fail(std::to_string(bad) + " mismatches");
  o.detail << (o.pass ? "" : " of ") << total << " monomials compared";
}

void skew_primitives(Outcome& o) {
  using radford::testing::in_span;
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    auto s1 = skew_primitive_space(ctx, 1);
    std::vector<Element> e1{Element::x(ctx), Element::y(ctx), Element::one(ctx) - Element::g(ctx)};
    bool ok = s1.size() == 3;
    for (const auto& e : e1) ok = ok && in_span(s1, e);
    if (!ok) o.fail("w=1 at n=" + std::to_string(n));
    for (int w = 2; w < n; ++w) {
      auto s = skew_primitive_space(ctx, w);
      Element expected = Element::one(ctx) - Element::monomial(ctx, {0, 0, w});
      if (s.size() != 1 || !in_span(s, expected))
        o.fail("w=" + std::to_string(w) + " at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail << "dim 3 at w=1, dim 1 at 2<=w<n";
}

void grouplikes(Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    for (const auto& b : basis(n)) {
      bool expected = b.r == 0 && b.s == 0;
      if (is_grouplike(Element::monomial(ctx, b)) != expected) o.fail(format(b));
    }
    Element one = Element::one(ctx), g = Element::g(ctx);
    for (const auto& e : {one + Element::x(ctx), g + Element::y(ctx), one - g})
      if (is_grouplike(e)) o.fail(format(e));
  }
  if (o.pass) o.detail << "exactly the powers of g";
}

void star_structures(Outcome& o) {
  int count = 0;
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    for (const auto& a : roots_of_unity(ctx)) {
      for (const auto& b : roots_of_unity(ctx)) {
        ++count;
        auto report = verify_star_axioms(StarStructure::diagonal(ctx, a, b));
        if (report.checks.size() != 5 || !report.all_passed())
          o.fail("diag(" + format(a) + ", " + format(b) + ") at n=" + std::to_string(n));
      }
    }
  }
  for (const auto& st : witness_matrices(FieldContext::make(2))) {
    ++count;
    if (!verify_star_axioms(st).all_passed()) o.fail("matrix " + format(st.x_image()));
  }
  if (o.pass) o.detail << count << " structures, all five checks, exhaustive";
}

void negative_candidates(Outcome& o) {
  auto ctx = FieldContext::make(3);
  Element g2 = Element::monomial(ctx, {0, 0, 2});
  Element shape = Element::one(ctx) - g2;
  std::vector<std::pair<std::string, StarStructure>> candidates{
      {"x*=2x", StarStructure::raw(Element::g(ctx), q(ctx, 2) * Element::x(ctx), Element::y(ctx))},
      {"g*=g^2, x*=y*=1-g^2", StarStructure::raw(g2, shape, shape)},
      {"g*=g^2, x*=y*=0", StarStructure::raw(g2, Element(ctx), Element(ctx))},
      {"g*=g^2, x*=1-g^2, y*=-(1-g^2)", StarStructure::raw(g2, shape, -shape)},
  };
  for (const auto& [name, st] : candidates) {
    auto report = verify_star_axioms(st);
    const CheckResult* first = nullptr;
    for (const auto& c : report.checks)
      if (!c.pass && !first) first = &c;
    if (!first || !first->counterexample || first->counterexample->at.empty()) {
      o.fail(name + " not rejected with a counterexample");
      continue;
    }
    o.detail << name << ": " << first->name << " at " << format(first->counterexample->at[0]) << "; ";
  }
}

void diagonal_witnesses(Outcome& o) {
  int count = 0;
  for (int n : {3, 4, 6}) {
    auto ctx = FieldContext::make(n);
    auto ident = StarStructure::diagonal(ctx, q(ctx, 1), q(ctx, 1));
    for (const auto& a : roots_of_unity(ctx)) {
      for (const auto& b : roots_of_unity(ctx)) {
        ++count;
        auto st = StarStructure::diagonal(ctx, a, b);
        auto phi = equivalence_witness_diag(st);
        if (!verify_equivalence(phi, st, ident))
          o.fail("diag(" + format(a) + ", " + format(b) + ") at n=" + std::to_string(n));
      }
    }
  }
  if (o.pass) o.detail << count << " pairs verified";
}

void n2_equivalence(Outcome& o) {
  auto ctx = FieldContext::make(2);
  Scalar i = Scalar::imaginary_unit(ctx);
  auto set = witness_matrices(ctx);
  auto hand = Automorphism::matrix(ctx, {q(ctx, 1) + i, q(ctx, 0), q(ctx, 0), q(ctx, 1) - i});
  if (!verify_equivalence(hand, set[0], set[2])) o.fail("hand witness rejected");
  auto solved = solve_equivalence_n2(set[0], set[2]);
  if (!solved.witness || !verify_equivalence(*solved.witness, set[0], set[2]))
    o.fail("solver found no verified witness for (I, diag(i,-i))");
  int equivalent = 0;
  for (const auto& a : set) {
    for (const auto& b : set) {
      auto r = solve_equivalence_n2(a, b);
      if (r.equivalent() != r.witness.has_value()) o.fail("verdict without witness");
      if (r.witness && !verify_equivalence(*r.witness, a, b)) o.fail("unverified witness");
      equivalent += r.equivalent();
    }
  }
  if (o.pass) o.detail << equivalent << "/16 witness-set pairs equivalent, all witnesses verified";
}

void rewrite_oracle(Outcome& o) {
  int compared = 0, bad = 0;
  for (int n = 2; n <= 4; ++n) {
    auto ctx = FieldContext::make(n);
    for (const auto& a : basis(n)) {
      for (const auto& b : basis(n)) {
        FreeWord w{letters_of(a), q(ctx, 1)};
        for (auto l : letters_of(b)) w.letters.push_back(l);
        ++compared;
        if (!(monomial_mul(ctx, a, b) == rewrite_word(ctx, w))) ++bad;
      }
    }
  }
  if (bad) o.fail(std::to_string(bad) + " mismatches");
  o.detail << (o.pass ? "" : " of ") << compared << " pairs compared";
}

void cli_contract(Outcome& o) {
  using radford::testing::run;
  using radford::testing::validates;
  using radford::testing::write_file;

  std::mt19937_64 rng(0xACCE55);
  for (int n = 2; n <= 6; ++n) {
    auto ctx = FieldContext::make(n);
    for (int k = 0; k < 200; ++k) {
      Element e = radford::testing::random_element(ctx, rng, 6);
      if (!(parse_element(format(e), ctx) == e)) o.fail("round trip: " + format(e));
    }
  }

  auto c3 = FieldContext::make(3);
  auto failing = write_file(
      "acc_doubled.json",
      to_json(StarStructure::raw(Element::g(c3), q(c3, 2) * Element::x(c3), Element::y(c3))).dump());
  auto corrupted = write_file("acc_corrupted.json", R"({"context": {"n": 3, "m": 12}, "kind": "diag", "alpha": [)");
  auto fail_run = run({"--n", "3", "--json", "verify", "star", "--star", failing});
  if (fail_run.code != 1) o.fail("failing axiom check did not exit 1");
  bool counterexample = false;
  const Json report = Json::parse(fail_run.out);
  for (const auto& c : report["checks"]) counterexample |= c.contains("counterexample");
  if (!counterexample) o.fail("no counterexample in failing report");
  if (run({"--n", "3", "verify", "star", "--star", corrupted}).code != 2) o.fail("corrupted file did not exit 2");
  if (run({"--n", "3", "normalize", "x**g"}).code != 2) o.fail("parse error did not exit 2");
  if (run({"--n", "3", "verify", "hopf"}).code != 0) o.fail("verify hopf did not exit 0");

  auto c2 = FieldContext::make(2);
  auto set = witness_matrices(c2);
  auto ident = write_file("acc_ident.json", to_json(set[0]).dump());
  auto swapped = write_file("acc_swapscaled.json", to_json(set[3]).dump());
  std::vector<std::pair<std::vector<std::string>, const char*>> outputs{
      {{"--n", "3", "--json", "normalize", "x*g + w*g*x"}, "element"},
      {{"--n", "3", "--json", "delta", "y^2"}, "tensor"},
      {{"--n", "3", "--json", "counit", "1+x"}, "counit"},
      {{"--n", "3", "--json", "antipode-order"}, "order"},
      {{"--n", "3", "--json", "verify", "hopf"}, "report"},
      {{"--n", "3", "--json", "verify", "star", "--star", failing}, "report"},
      {{"--n", "3", "--json", "solve", "skew", "--w", "2"}, "skew"},
      {{"--n", "3", "--json", "grouplike", "g"}, "grouplike"},
      {{"--n", "3", "--json", "equiv", "diag", "--alpha", "-1", "--beta", "w"}, "equivalence"},
      {{"--n", "2", "--json", "equiv", "n2", "--a", ident, "--b", swapped}, "equivalence"},
      {{"--n", "2", "--json", "scan"}, "scan"},
  };
  for (const auto& [args, definition] : outputs) {
    auto r = run(args);
    if (r.code > 1 || !validates(definition, r.out)) o.fail(std::string("schema ") + definition);
  }
  if (o.pass) o.detail << "1000 round trips, exit codes 0/1/2, " << outputs.size() << " outputs schema-valid";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "Hopf axioms", hopf_axioms},
      {2, "antipode order 2n", antipode_order_check},
      {3, "closed coproduct formula", closed_coproduct},
      {4, "skew-primitive spaces", skew_primitives},
      {5, "group-like elements", grouplikes},
      {6, "*-structure axioms", star_structures},
      {7, "negative candidates rejected", negative_candidates},
      {8, "diagonal equivalence witnesses", diagonal_witnesses},
      {9, "n = 2 equivalence", n2_equivalence},
      {10, "product vs rewriting oracle", rewrite_oracle},
      {11, "CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail.str()
              << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
