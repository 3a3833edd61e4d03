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
#include "radford/star.hpp"

#include <array>
#include <random>
#include <set>

#include "radford/expr.hpp"

namespace radford {

namespace {

void require_same_field(const ContextPtr& ctx, const Scalar& s, const char* what) {
  if (s.context().m() != ctx->m()) {
    throw DomainError(std::string(what) + " lives in a different field than the algebra");
  }
}

// Ordered basis pairs to visit for a binary law.
std::vector<std::pair<std::size_t, std::size_t>> pair_schedule(std::size_t dim,
                                                               const VerifyOptions& options) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t total = dim * dim;
  if (!options.pair_samples || *options.pair_samples >= total) {
    out.reserve(total);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) out.emplace_back(a, b);
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, total - 1);
  std::set<std::size_t> chosen;
  while (chosen.size() < *options.pair_samples) chosen.insert(pick(rng));
  for (auto k : chosen) out.emplace_back(k / dim, k % dim);
  return out;
}

// Linear extension of a table of basis images.
Element extend(const Element& e, const std::vector<Element>& table, int n) {
  Element out(e.context_ptr());
  for (const auto& [b, c] : e.terms()) out += c * table[basis_index(b, n)];
  return out;
}

Element extend_conjugate(const Element& e, const std::vector<Element>& table, int n) {
  Element out(e.context_ptr());
  for (const auto& [b, c] : e.terms()) out += conjugate(c) * table[basis_index(b, n)];
  return out;
}

TensorElement extend(const Element& e, const std::vector<TensorElement>& table, int n) {
  TensorElement out(e.context_ptr());
  for (const auto& [b, c] : e.terms()) out += c * table[basis_index(b, n)];
  return out;
}

using Triple = std::map<std::array<Monomial, 3>, Scalar>;

void accumulate(Triple& t, const std::array<Monomial, 3>& key, const Scalar& c) {
  auto [it, inserted] = t.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

std::string format_triple(const Triple& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : t) {
    if (!out.empty()) out += " + ";
    out += "(" + format(c) + ")*(" + format(k[0]) + " ⊗ " + format(k[1]) + " ⊗ " +
           format(k[2]) + ")";
  }
  return out;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string name) { result_.name = std::move(name); }

  // Records the first counterexample only.
  template <class T>
  void compare(std::vector<Monomial> at, const T& lhs, const T& rhs) {
    if (lhs == rhs) return;
    fail(std::move(at), format(lhs), format(rhs));
  }

  void fail(std::vector<Monomial> at, std::string lhs, std::string rhs) {
    if (!result_.pass) return;
    result_.pass = false;
    result_.counterexample = Counterexample{std::move(at), std::move(lhs), std::move(rhs)};
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

}  // namespace

StarStructure StarStructure::diagonal(const ContextPtr& ctx, const Scalar& alpha,
                                      const Scalar& beta) {
  require_same_field(ctx, alpha, "alpha");
  require_same_field(ctx, beta, "beta");
  if (!is_norm_one(alpha)) throw DomainError("alpha must satisfy |alpha| = 1");
  if (!is_norm_one(beta)) throw DomainError("beta must satisfy |beta| = 1");
  Scalar a = alpha.context().same_as(*ctx) ? alpha : Scalar(ctx, std::vector(alpha.coords().begin(), alpha.coords().end()));
  Scalar b = beta.context().same_as(*ctx) ? beta : Scalar(ctx, std::vector(beta.coords().begin(), beta.coords().end()));
  StarStructure st(Kind::DiagonalPair, Element::g(ctx), a * Element::x(ctx), b * Element::y(ctx));
  st.pair_ = std::array<Scalar, 2>{a, b};
  return st;
}

StarStructure StarStructure::matrix(const ContextPtr& ctx, const std::array<Scalar, 4>& a) {
  if (ctx->n() != 2) {
    throw DomainError("matrix *-structures exist only for n = 2 (got n = " +
                      std::to_string(ctx->n()) + ")");
  }
  std::array<Scalar, 4> entries{a};
  for (auto& e : entries) {
    require_same_field(ctx, e, "matrix entry");
    e = Scalar(ctx, std::vector(e.coords().begin(), e.coords().end()));
  }
  // (conj(A) A)_{ij} = sum_k conj(a_ik) a_kj
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Scalar v = conjugate(entries[2 * i]) * entries[j] +
                 conjugate(entries[2 * i + 1]) * entries[2 + j];
      Scalar expected(ctx, Rational(i == j ? 1 : 0));
      if (!(v == expected)) {
        throw DomainError("conj(A) A != I: entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") is " + format(v));
      }
    }
  }
  Element x = Element::x(ctx), y = Element::y(ctx);
  StarStructure st(Kind::Matrix2, Element::g(ctx), entries[0] * x + entries[1] * y,
                   entries[2] * x + entries[3] * y);
  st.matrix_ = entries;
  return st;
}

StarStructure StarStructure::raw(Element g_image, Element x_image, Element y_image) {
  if (!g_image.context().same_as(x_image.context()) ||
      !g_image.context().same_as(y_image.context())) {
    throw DomainError("raw star images must live in the same algebra");
  }
  return StarStructure(Kind::RawImages, std::move(g_image), std::move(x_image),
                       std::move(y_image));
}

Element StarStructure::monomial_image(const Monomial& b) const {
  return element_pow(g_, b.l) * element_pow(x_, b.s) * element_pow(y_, b.r);
}

StarStructure StarStructure::embed(const ContextPtr& target) const {
  StarStructure st(kind_, g_.embed(target), x_.embed(target), y_.embed(target));
  if (pair_) st.pair_ = std::array<Scalar, 2>{(*pair_)[0].embed(target), (*pair_)[1].embed(target)};
  if (matrix_) {
    st.matrix_ = std::array<Scalar, 4>{(*matrix_)[0].embed(target), (*matrix_)[1].embed(target),
                                       (*matrix_)[2].embed(target), (*matrix_)[3].embed(target)};
  }
  return st;
}

Element apply_star(const StarStructure& st, const Element& e) {
  if (!e.context().same_as(st.context())) throw DomainError("element and star live in different algebras");
  Element out(e.context_ptr());
  for (const auto& [b, c] : e.terms()) out += conjugate(c) * st.monomial_image(b);
  return out;
}

bool VerificationReport::all_passed() const noexcept {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const noexcept {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerifyOptions VerifyOptions::for_degree(int n) {
  VerifyOptions options;
  if (n > 4) options.pair_samples = 2000;
  return options;
}

VerificationReport verify_star_axioms(const StarStructure& st, const VerifyOptions& options) {
  const auto& ctx = st.context_ptr();
  const int n = ctx->n();
  const auto monomials = basis(n);
  const auto data = HopfData::standard(ctx);

  std::vector<Element> star, s_table;
  std::vector<TensorElement> d_table;
  for (const auto& b : monomials) {
    star.push_back(st.monomial_image(b));
    s_table.push_back(antipode(b, data));
    d_table.push_back(delta(b, data));
  }
  auto star_of = [&](const Monomial& b) { return star[basis_index(b, n)]; };

  VerificationReport report;

  ReportBuilder involution(check_names::kInvolution);
  for (const auto& b : monomials) {
    involution.compare({b}, extend_conjugate(star_of(b), star, n), Element::monomial(ctx, b));
  }
  report.checks.push_back(involution.done());

  ReportBuilder antimult(check_names::kAntimultiplicative);
  for (auto [i, j] : pair_schedule(monomials.size(), options)) {
    const auto &h = monomials[i], &l = monomials[j];
    Element lhs = extend_conjugate(monomial_mul(ctx, h, l), star, n);
    Element rhs = star[j] * star[i];
    antimult.compare({h, l}, lhs, rhs);
  }
  report.checks.push_back(antimult.done());

  ReportBuilder coproduct(check_names::kCoproduct);
  for (const auto& b : monomials) {
    TensorElement lhs = extend(star_of(b), d_table, n);
    TensorElement rhs = tensor_map(d_table[basis_index(b, n)], star_of, star_of,
                                   Linearity::ConjugateLinear);
    coproduct.compare({b}, lhs, rhs);
  }
  report.checks.push_back(coproduct.done());

  ReportBuilder antipode_star(check_names::kAntipodeStar);
  for (const auto& b : monomials) {
    Element inner = extend_conjugate(extend(star_of(b), s_table, n), star, n);
    antipode_star.compare({b}, extend(inner, s_table, n), Element::monomial(ctx, b));
  }
  report.checks.push_back(antipode_star.done());

  ReportBuilder counit_check(check_names::kCounitConjugate);
  for (const auto& b : monomials) {
    Scalar lhs = counit(star_of(b));
    Scalar rhs = conjugate(counit(Element::monomial(ctx, b)));
    counit_check.compare({b}, lhs, rhs);
  }
  report.checks.push_back(counit_check.done());

  return report;
}

VerificationReport verify_hopf_axioms(const ContextPtr& ctx, const HopfData& data,
                                      const VerifyOptions& options) {
  const int n = ctx->n();
  const auto monomials = basis(n);
  std::vector<TensorElement> d_table;
  std::vector<Element> s_table;
  for (const auto& b : monomials) {
    d_table.push_back(delta(b, data));
    s_table.push_back(antipode(b, data));
  }
  const Element one = Element::one(ctx);
  VerificationReport report;

  ReportBuilder coassoc(check_names::kCoassociativity);
  for (const auto& b : monomials) {
    Triple lhs, rhs;
    for (const auto& [k, c] : d_table[basis_index(b, n)].terms()) {
      for (const auto& [k2, c2] : d_table[basis_index(k.first, n)].terms())
        accumulate(lhs, {k2.first, k2.second, k.second}, c * c2);
      for (const auto& [k2, c2] : d_table[basis_index(k.second, n)].terms())
        accumulate(rhs, {k.first, k2.first, k2.second}, c * c2);
    }
    if (lhs != rhs) coassoc.fail({b}, format_triple(lhs), format_triple(rhs));
  }
  report.checks.push_back(coassoc.done());

  ReportBuilder counit_law(check_names::kCounitLaw);
  for (const auto& b : monomials) {
    Element left(ctx), right(ctx);
    for (const auto& [k, c] : d_table[basis_index(b, n)].terms()) {
      left += (c * counit(Element::monomial(ctx, k.first))) * Element::monomial(ctx, k.second);
      right += (c * counit(Element::monomial(ctx, k.second))) * Element::monomial(ctx, k.first);
    }
    Element expected = Element::monomial(ctx, b);
    counit_law.compare({b}, left, expected);
    counit_law.compare({b}, right, expected);
  }
  report.checks.push_back(counit_law.done());

  ReportBuilder antipode_law(check_names::kAntipodeLaw);
  for (const auto& b : monomials) {
    Element left(ctx), right(ctx);
    for (const auto& [k, c] : d_table[basis_index(b, n)].terms()) {
      left += c * (s_table[basis_index(k.first, n)] * Element::monomial(ctx, k.second));
      right += c * (Element::monomial(ctx, k.first) * s_table[basis_index(k.second, n)]);
    }
    Element expected = counit(Element::monomial(ctx, b)) * one;
    antipode_law.compare({b}, left, expected);
    antipode_law.compare({b}, right, expected);
  }
  report.checks.push_back(antipode_law.done());

  ReportBuilder bialgebra(check_names::kBialgebra);
  for (auto [i, j] : pair_schedule(monomials.size(), options)) {
    const auto &a = monomials[i], &b = monomials[j];
    Element ab = monomial_mul(ctx, a, b);
    bialgebra.compare({a, b}, extend(ab, d_table, n), tensor_mul(d_table[i], d_table[j]));
    Scalar eps_ab = counit(ab);
    Scalar eps_prod = counit(Element::monomial(ctx, a)) * counit(Element::monomial(ctx, b));
    bialgebra.compare({a, b}, eps_ab, eps_prod);
  }
  report.checks.push_back(bialgebra.done());

  return report;
}

VerificationReport verify_hopf_axioms(const ContextPtr& ctx) {
  return verify_hopf_axioms(ctx, HopfData::standard(ctx), VerifyOptions::for_degree(ctx->n()));
}

}  // namespace radford
