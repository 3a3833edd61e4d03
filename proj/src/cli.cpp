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
#include "radford/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "radford/expr.hpp"
#include "radford/json_io.hpp"
#include "radford/solver.hpp"

namespace radford {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::optional<int> m;
  bool json = false;

  std::vector<std::string> exprs;
  std::string star_file;
  std::string alpha;
  std::string beta;
  std::string a_file;
  std::string b_file;
  int w = 0;
  int height = 3;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string describe(const Counterexample& c) {
  std::string at;
  for (const auto& b : c.at) at += (at.empty() ? "" : ", ") + format(b);
  return "at (" + at + "): " + c.lhs + " != " + c.rhs;
}

void print_report(const VerificationReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.counterexample) out << "  " << describe(*c.counterexample);
    out << "\n";
  }
}

std::string describe(const StarStructure& st) {
  return "g* = " + format(st.g_image()) + ", x* = " + format(st.x_image()) +
         ", y* = " + format(st.y_image());
}

std::string verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Equivalent:
      return "equivalent";
    case Verdict::NotEquivalent:
      return "not equivalent";
    case Verdict::UnknownWithinBound:
      return "unknown-within-bound";
  }
  return "";
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int dispatch(const std::string& command) {
    ctx_ = FieldContext::make(opt_.n, opt_.m);
    static const std::map<std::string, int (Runner::*)()> table{
        {"normalize", &Runner::normalize},
        {"mul", &Runner::mul},
        {"delta", &Runner::delta_cmd},
        {"delta-closed", &Runner::delta_closed_cmd},
        {"counit", &Runner::counit_cmd},
        {"antipode", &Runner::antipode_cmd},
        {"antipode-order", &Runner::antipode_order_cmd},
        {"star-apply", &Runner::star_apply},
        {"verify hopf", &Runner::verify_hopf},
        {"verify star", &Runner::verify_star},
        {"solve skew", &Runner::solve_skew},
        {"grouplike", &Runner::grouplike},
        {"equiv diag", &Runner::equiv_diag},
        {"equiv n2", &Runner::equiv_n2},
        {"scan", &Runner::scan},
    };
    return (this->*table.at(command))();
  }

 private:
  Element expr(std::size_t k) const { return parse_element(opt_.exprs.at(k), ctx_); }

  int emit_element(const Element& e) {
    if (opt_.json)
      out_ << to_json(e).dump() << "\n";
    else
      out_ << format(e) << "\n";
    return kExitOk;
  }

  int emit_tensor(const TensorElement& t) {
    if (opt_.json)
      out_ << to_json(t).dump() << "\n";
    else
      out_ << format(t) << "\n";
    return kExitOk;
  }

  int emit_report(const VerificationReport& report) {
    if (opt_.json)
      out_ << to_json(report).dump() << "\n";
    else
      print_report(report, out_);
    return report.all_passed() ? kExitOk : kExitFailed;
  }

  int emit_equivalence(const EquivalenceResult& result, bool with_dimension) {
    if (opt_.json) {
      Json j = to_json(result);
      if (!with_dimension) j.erase("nullspace_dimension");
      out_ << j.dump() << "\n";
    } else {
      out_ << verdict_text(result.verdict) << "\n";
      if (result.witness) {
        const auto& l = result.witness->entries();
        out_ << "phi(x) = " << format(result.witness->x_image()) << "\n"
             << "phi(y) = " << format(result.witness->y_image()) << "\n"
             << "lambda = [[" << format(l[0]) << ", " << format(l[1]) << "], [" << format(l[2])
             << ", " << format(l[3]) << "]] over m = " << result.witness->context_ptr()->m()
             << "\n";
      }
      if (with_dimension) out_ << "nullspace dimension " << result.nullspace_dimension << "\n";
    }
    return result.equivalent() ? kExitOk : kExitFailed;
  }

  StarStructure star_argument() const {
    if (!opt_.star_file.empty()) return star_from_json(read_json_file(opt_.star_file), ctx_);
    if (opt_.alpha.empty() || opt_.beta.empty())
      throw UsageError("give --star FILE or both --alpha and --beta");
    return StarStructure::diagonal(ctx_, parse_scalar(opt_.alpha, ctx_),
                                   parse_scalar(opt_.beta, ctx_));
  }

  int normalize() { return emit_element(expr(0)); }
  int mul() { return emit_element(expr(0) * expr(1)); }
  int delta_cmd() { return emit_tensor(delta(expr(0))); }
  int delta_closed_cmd() { return emit_tensor(delta_closed(expr(0))); }
  int antipode_cmd() { return emit_element(antipode(expr(0))); }

  int counit_cmd() {
    Scalar c = counit(expr(0));
    if (opt_.json)
      out_ << Json{{"context", to_json(*ctx_)}, {"value", to_json(c)}}.dump() << "\n";
    else
      out_ << format(c) << "\n";
    return kExitOk;
  }

  int antipode_order_cmd() {
    int order = antipode_order(ctx_);
    if (opt_.json)
      out_ << Json{{"order", order}}.dump() << "\n";
    else
      out_ << order << "\n";
    return kExitOk;
  }

  int star_apply() {
    if (opt_.star_file.empty()) throw UsageError("star-apply needs --star FILE");
    return emit_element(apply_star(star_argument(), expr(0)));
  }

  int verify_hopf() {
    return emit_report(verify_hopf_axioms(ctx_, HopfData::standard(ctx_),
                                          VerifyOptions::for_degree(ctx_->n())));
  }

  int verify_star() { return emit_report(verify_star_axioms(star_argument())); }

  int solve_skew() {
    auto space = skew_primitive_space(ctx_, opt_.w);
    if (opt_.json) {
      Json basis = Json::array();
      for (const auto& e : space) basis.push_back(to_json(e));
      out_ << Json{{"dimension", space.size()}, {"basis", std::move(basis)}}.dump() << "\n";
    } else {
      out_ << "dimension " << space.size() << "\n";
      for (const auto& e : space) out_ << format(e) << "\n";
    }
    return kExitOk;
  }

  int grouplike() {
    bool result = is_grouplike(expr(0));
    if (opt_.json)
      out_ << Json{{"grouplike", result}}.dump() << "\n";
    else
      out_ << (result ? "true" : "false") << "\n";
    return result ? kExitOk : kExitFailed;
  }

  int equiv_diag() {
    if (opt_.alpha.empty() || opt_.beta.empty()) throw UsageError("equiv diag needs --alpha and --beta");
    auto st = StarStructure::diagonal(ctx_, parse_scalar(opt_.alpha, ctx_),
                                      parse_scalar(opt_.beta, ctx_));
    EquivalenceResult result;
    result.witness = equivalence_witness_diag(st);
    result.verdict = Verdict::Equivalent;
    return emit_equivalence(result, false);
  }

  int equiv_n2() {
    auto a = star_from_json(read_json_file(opt_.a_file), ctx_);
    auto b = star_from_json(read_json_file(opt_.b_file), ctx_);
    return emit_equivalence(solve_equivalence_n2(a, b, opt_.height), true);
  }

  int scan() {
    auto survivors = scan_star_candidates(ctx_, default_grid(ctx_));
    if (opt_.json) {
      Json list = Json::array();
      for (const auto& st : survivors) list.push_back(to_json(st));
      out_ << Json{{"context", to_json(*ctx_)},
                   {"count", survivors.size()},
                   {"survivors", std::move(list)}}
                  .dump()
           << "\n";
    } else {
      out_ << survivors.size() << " survivors\n";
      for (const auto& st : survivors) out_ << describe(st) << "\n";
    }
    return kExitOk;
  }

  const Options& opt_;
  std::ostream& out_;
  ContextPtr ctx_;
};

// verify-hopf -> verify hopf, and so on.
std::vector<std::string> split_aliases(const std::vector<std::string>& args) {
  static const std::map<std::string, std::pair<std::string, std::string>> aliases{
      {"verify-hopf", {"verify", "hopf"}}, {"verify-star", {"verify", "star"}},
      {"solve-skew", {"solve", "skew"}},   {"equiv-diag", {"equiv", "diag"}},
      {"equiv-n2", {"equiv", "n2"}},
  };
  std::vector<std::string> out;
  for (const auto& a : args) {
    auto it = aliases.find(a);
    if (it == aliases.end()) {
      out.push_back(a);
    } else {
      out.push_back(it->second.first);
      out.push_back(it->second.second);
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations in the Radford Hopf algebra H_n", "radford"};
  app.add_option("--n", opt.n, "order of omega (n >= 2)")->required();
  app.add_option("--m", opt.m, "conductor of the scalar field, divisible by 4 and n");
  app.add_flag("--json", opt.json, "machine-readable output");
  app.require_subcommand(1);
  app.fallthrough();

  std::string selected;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  const std::string& key) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&selected, key] { selected = key; });
    return sub;
  };
  auto with_exprs = [&](CLI::App* sub, std::size_t count) {
    sub->add_option("expr", opt.exprs, count == 1 ? "element expression" : "two element expressions")
        ->required()
        ->expected(static_cast<int>(count));
    return sub;
  };

  with_exprs(leaf(&app, "normalize", "canonical form of an element", "normalize"), 1);
  with_exprs(leaf(&app, "mul", "product of two elements", "mul"), 2);
  with_exprs(leaf(&app, "delta", "coproduct", "delta"), 1);
  with_exprs(leaf(&app, "delta-closed", "coproduct from the q-binomial formula", "delta-closed"), 1);
  with_exprs(leaf(&app, "counit", "counit", "counit"), 1);
  with_exprs(leaf(&app, "antipode", "antipode", "antipode"), 1);
  leaf(&app, "antipode-order", "order of the antipode", "antipode-order");
  auto* star_apply = with_exprs(leaf(&app, "star-apply", "apply a *-structure", "star-apply"), 1);
  star_apply->add_option("--star", opt.star_file, "StarStructure JSON file")->required();

  auto* verify = app.add_subcommand("verify", "axiom checks");
  verify->require_subcommand(1);
  verify->fallthrough();
  leaf(verify, "hopf", "Hopf algebra axioms", "verify hopf");
  auto* vstar = leaf(verify, "star", "*-structure axioms", "verify star");
  vstar->add_option("--star", opt.star_file, "StarStructure JSON file");
  vstar->add_option("--alpha", opt.alpha, "x* = alpha x");
  vstar->add_option("--beta", opt.beta, "y* = beta y");

  auto* solve = app.add_subcommand("solve", "linear solvers");
  solve->require_subcommand(1);
  solve->fallthrough();
  leaf(solve, "skew", "skew-primitive elements for g^w", "solve skew")
      ->add_option("--w", opt.w, "exponent w in [0, n)")
      ->required();

  with_exprs(leaf(&app, "grouplike", "group-like test", "grouplike"), 1);

  auto* equiv = app.add_subcommand("equiv", "equivalence of *-structures");
  equiv->require_subcommand(1);
  equiv->fallthrough();
  auto* ediag = leaf(equiv, "diag", "witness for diag(alpha, beta) ~ identity", "equiv diag");
  ediag->add_option("--alpha", opt.alpha, "x* = alpha x")->required();
  ediag->add_option("--beta", opt.beta, "y* = beta y")->required();
  auto* en2 = leaf(equiv, "n2", "solve A Lambda = conj(Lambda) B at n = 2", "equiv n2");
  en2->add_option("--a", opt.a_file, "StarStructure JSON file")->required();
  en2->add_option("--b", opt.b_file, "StarStructure JSON file")->required();
  en2->add_option("--height", opt.height, "search bound for integer combinations")
      ->check(CLI::Range(1, 10));

  leaf(&app, "scan", "search grid candidates for *-structures", "scan");

  std::vector<std::string> args = split_aliases(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return Runner(opt, out).dispatch(selected);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const FormatError& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace radford
