// Copyright 2026 The detlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "detlab/laws.hpp"

#include <algorithm>

namespace detlab {

RingElem LawImpl::lambda(const AlgebraElem& x, int i) const {
  const RingContextPtr& ctx = x.context();
  if (i < 0) fail("InvalidInput", "negative lambda index");
  if (i == 0) return RingElem::one(ctx);
  if (i > dim()) return RingElem::zero(ctx);
  auto [ext, vars] = extend_with_vars(ctx, 1, "chart");
  RingElem t = RingElem::variable(ext, vars[0]);
  AlgebraElem e = delta(*table(), table()->identity(), ext).scaled(t) - embed_elem(x, ext);
  RingElem chi = eval(e);
  RingElem c = chi.coeff_in_var(vars[0], dim() - i);
  RingElem value = restrict_context(c, ctx);
  return i % 2 == 0 ? value : value.neg();
}

RingElem DeterminantLaw::lambda_element(int g, int i) const {
  return lambda(delta(*table(), g, base_context()), i);
}

std::vector<RingElem> DeterminantLaw::charpoly_element(int g) const {
  std::vector<RingElem> out;
  out.reserve(dim() + 1);
  for (int i = 0; i <= dim(); ++i) {
    RingElem li = lambda_element(g, i);
    out.push_back(i % 2 == 0 ? li : li.neg());
  }
  return out;
}

namespace {

class MatrixDetImpl final : public LawImpl {
 public:
  explicit MatrixDetImpl(std::shared_ptr<const MatrixRep> rep) : rep_(std::move(rep)) {}

  int dim() const override { return rep_->dim(); }
  RingContextPtr base_context() const override { return rep_->context(); }
  MonoidPtr table() const override { return rep_->table(); }
  std::string describe() const override {
    return "det of a " + std::to_string(rep_->dim()) + "-dim representation";
  }

  RingElem eval(const AlgebraElem& x) const override { return det(rep_->image_of(x)); }

  RingElem lambda(const AlgebraElem& x, int i) const override {
    return matrix_lambda(rep_->image_of(x), i);
  }

 private:
  std::shared_ptr<const MatrixRep> rep_;
};

class CharacterImpl final : public LawImpl {
 public:
  CharacterImpl(MonoidPtr table, std::vector<RingElem> values)
      : table_(std::move(table)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != table_->size())
      fail("InvalidInput", "character value count differs from monoid size");
    ctx_ = values_[0].context();
    for (const auto& v : values_) {
      if (!same_context(v.context(), ctx_)) fail("ContextMismatch", "character values over different contexts");
      if (!v.is_unit()) fail("NotAUnit", "character value " + v.str() + " is not a unit");
    }
    if (!values_[table_->identity()].is_one()) fail("InvalidInput", "character of the identity is not 1");
    for (int x = 0; x < table_->size(); ++x)
      for (int y = 0; y < table_->size(); ++y)
        if (!(values_[x] * values_[y] == values_[table_->mul(x, y)]))
          fail("NotAHomomorphism", "character violates the table at (" + std::to_string(x) + "," +
                                       std::to_string(y) + ")");
  }

  int dim() const override { return 1; }
  RingContextPtr base_context() const override { return ctx_; }
  MonoidPtr table() const override { return table_; }
  std::string describe() const override { return "character (dimension 1)"; }

  RingElem eval(const AlgebraElem& x) const override {
    RingElem acc = RingElem::zero(x.context());
    for (const auto& [g, c] : x.terms()) acc = acc + c * embed(values_[g], x.context());
    return acc;
  }

  RingElem lambda(const AlgebraElem& x, int i) const override {
    if (i == 0) return RingElem::one(x.context());
    if (i == 1) return eval(x);
    return RingElem::zero(x.context());
  }

 private:
  MonoidPtr table_;
  RingContextPtr ctx_;
  std::vector<RingElem> values_;
};

class PowerImpl final : public LawImpl {
 public:
  PowerImpl(DeterminantLaw inner, int m) : inner_(std::move(inner)), m_(m) {
    if (m < 1) fail("InvalidInput", "power exponent must be >= 1");
  }

  int dim() const override { return inner_.dim() * m_; }
  RingContextPtr base_context() const override { return inner_.base_context(); }
  MonoidPtr table() const override { return inner_.table(); }
  std::string describe() const override {
    return "power " + std::to_string(m_) + " of (" + inner_.describe() + ")";
  }

  RingElem eval(const AlgebraElem& x) const override {
    return inner_.eval(x).pow(static_cast<unsigned>(m_));
  }

 private:
  DeterminantLaw inner_;
  int m_;
};

}  // namespace

DeterminantLaw DeterminantLaw::matrix_det(std::shared_ptr<const MatrixRep> rep) {
  return DeterminantLaw(std::make_shared<MatrixDetImpl>(std::move(rep)));
}

DeterminantLaw DeterminantLaw::character(MonoidPtr table, std::vector<RingElem> values) {
  return DeterminantLaw(std::make_shared<CharacterImpl>(std::move(table), std::move(values)));
}

DeterminantLaw DeterminantLaw::power(DeterminantLaw inner, int m) {
  return DeterminantLaw(std::make_shared<PowerImpl>(std::move(inner), m));
}

namespace {

/// Generic element supported on `support`, with fresh variables appended.
AlgebraElem generic_on_support(const std::vector<int>& support, const RingContextPtr& ext,
                               const std::vector<int>& var_indices, std::size_t offset) {
  std::map<int, RingElem> terms;
  for (std::size_t i = 0; i < support.size(); ++i) {
    RingElem t = RingElem::variable(ext, var_indices[offset + i]);
    auto it = terms.find(support[i]);
    if (it == terms.end())
      terms.emplace(support[i], std::move(t));
    else
      it->second = it->second + t;
  }
  return AlgebraElem(ext, std::move(terms));
}

std::string first_violating_monomial(const RingElem& diff) {
  if (diff.context()->kind != RingKind::Polynomial) return diff.str();
  const auto& terms = diff.poly_terms();
  if (terms.empty()) return "";
  const auto& [m, c] = terms.back();  // highest graded-lex term
  std::string mono;
  for (const auto& [v, e] : m.factors) {
    if (!mono.empty()) mono += "*";
    mono += diff.context()->vars[v];
    if (e > 1) mono += "^" + std::to_string(e);
  }
  if (mono.empty()) mono = "1";
  return mono + " with coefficient " + c.str();
}

std::vector<int> sample_support(Rng& rng, int monoid_size, int max_size) {
  int size = static_cast<int>(rng.range(1, std::min(max_size, monoid_size)));
  std::vector<int> support;
  for (int i = 0; i < size; ++i) support.push_back(static_cast<int>(rng.range(0, monoid_size - 1)));
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support;
}

}  // namespace

Report law_identity_fuzz(const DeterminantLaw& law, const std::set<std::string>& checks,
                         int trials, std::uint64_t seed) {
  Report report;
  report.subcommand = "law-identity-fuzz";
  report.params = Json{{"trials", trials}, {"seed", seed}, {"dim", law.dim()}};
  const FiniteMonoidTable& table = *law.table();
  const RingContextPtr& base = law.base_context();

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::derive(seed, trial);
    if (checks.count("multiplicativity")) {
      std::vector<int> sup_x = sample_support(rng, table.size(), 3);
      std::vector<int> sup_y = sample_support(rng, table.size(), 3);
      auto [ext, vars] = extend_with_vars(base, static_cast<int>(sup_x.size() + sup_y.size()), "v");
      AlgebraElem x = generic_on_support(sup_x, ext, vars, 0);
      AlgebraElem y = generic_on_support(sup_y, ext, vars, sup_x.size());
      RingElem lhs = law.eval(algebra_mul(x, y, table));
      RingElem rhs = law.eval(x) * law.eval(y);
      RingElem diff = lhs - rhs;
      CheckResult c;
      c.name = "multiplicativity D(xy)=D(x)D(y), trial " + std::to_string(trial);
      c.anchor = "multiplicative-law";
      c.origin = "definition";
      c.pass = diff.is_zero();
      if (!c.pass) c.witness = "violating monomial " + first_violating_monomial(diff);
      report.add(std::move(c));
    }
    if (checks.count("swap")) {
      std::vector<int> sup_r = sample_support(rng, table.size(), 3);
      std::vector<int> sup_s = sample_support(rng, table.size(), 3);
      auto [ext, vars] = extend_with_vars(base, static_cast<int>(sup_r.size() + sup_s.size()), "w");
      AlgebraElem r = generic_on_support(sup_r, ext, vars, 0);
      AlgebraElem s = generic_on_support(sup_s, ext, vars, sup_r.size());
      AlgebraElem one = delta(table, table.identity(), ext);
      RingElem lhs = law.eval(one + algebra_mul(r, s, table));
      RingElem rhs = law.eval(one + algebra_mul(s, r, table));
      RingElem diff = lhs - rhs;
      CheckResult c;
      c.name = "swap D(1+rr')=D(1+r'r), trial " + std::to_string(trial);
      c.anchor = "swap-identity";
      c.origin = "definition";
      c.pass = diff.is_zero();
      if (!c.pass) c.witness = "violating monomial " + first_violating_monomial(diff);
      report.add(std::move(c));
    }
  }
  return report;
}

Report validate_law(const DeterminantLaw& law) {
  Report report;
  report.subcommand = "validate-law";
  const FiniteMonoidTable& table = *law.table();
  const RingContextPtr& base = law.base_context();
  int d = law.dim();

  {
    CheckResult c;
    c.name = "D(1) = 1";
    c.anchor = "multiplicative-law";
    c.origin = "definition";
    c.pass = law.eval(delta(table, table.identity(), base)).is_one();
    report.add(std::move(c));
  }
  {
    std::vector<int> all;
    for (int g = 0; g < table.size(); ++g) all.push_back(g);
    GenericElement gen = generic_element(all, table, base);
    CheckResult c0;
    c0.name = "Lambda_0 = 1 on a generic element";
    c0.anchor = "characteristic-coefficients";
    c0.origin = "definition";
    c0.pass = law.lambda(gen.elem, 0).is_one();
    report.add(std::move(c0));
    CheckResult ch;
    ch.name = "Lambda_i = 0 for i > dim on a generic element";
    ch.anchor = "characteristic-coefficients";
    ch.origin = "definition";
    ch.pass = law.lambda(gen.elem, d + 1).is_zero() && law.lambda(gen.elem, d + 2).is_zero();
    report.add(std::move(ch));

    // homogeneity in a fresh scalar
    auto [ext2, bvar] = extend_with_vars(gen.ctx, 1, "b");
    RingElem b = RingElem::variable(ext2, bvar[0]);
    AlgebraElem x = embed_elem(gen.elem, ext2);
    RingElem lhs = law.eval(x.scaled(b));
    RingElem rhs = law.eval(x) * b.pow(d);
    CheckResult hom;
    hom.name = "homogeneity D(b*x) = b^dim * D(x)";
    hom.anchor = "homogeneous-law";
    hom.origin = "definition";
    hom.pass = (lhs == rhs);
    report.add(std::move(hom));
  }
  return report;
}

}  // namespace detlab
