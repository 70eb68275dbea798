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

#include "detlab/dim2.hpp"

#include <sstream>

#include "detlab/ch_kernel.hpp"

namespace detlab {

namespace {

std::string pair_witness(const FiniteMonoidTable& t, int g, int h) {
  return "(" + t.label(g) + "," + t.label(h) + ")";
}

}  // namespace

Report verify_dim2_axioms(const Dim2Law& law) {
  Report report;
  report.subcommand = "dim2-verify";
  const FiniteMonoidTable& table = *law.table;
  if (!table.is_group()) fail("NoInverses", "dimension-2 axioms need a group");
  const RingContextPtr& ctx = law.ctx;
  int m = table.size();
  const RingElem two = RingElem::from_int(ctx, 2);

  {
    CheckResult c;
    c.name = "T(1) = 2";
    c.anchor = "dim2-axioms";
    c.origin = "definition";
    c.pass = (law.T[table.identity()] == two);
    if (!c.pass) c.witness = "T(1) = " + law.T[table.identity()].str();
    report.add(std::move(c));
  }
  {
    CheckResult c;
    c.name = "D is a homomorphism into units with D(1) = 1";
    c.anchor = "dim2-axioms";
    c.origin = "definition";
    c.pass = law.D[table.identity()].is_one();
    for (int g = 0; g < m && c.pass; ++g) {
      if (!law.D[g].is_unit()) {
        c.pass = false;
        c.witness = "D(" + table.label(g) + ") = " + law.D[g].str() + " is not a unit";
      }
    }
    for (int g = 0; g < m && c.pass; ++g)
      for (int h = 0; h < m && c.pass; ++h)
        if (!(law.D[table.mul(g, h)] == law.D[g] * law.D[h])) {
          c.pass = false;
          c.witness = "D(gh) != D(g)D(h) at " + pair_witness(table, g, h);
        }
    report.add(std::move(c));
  }
  {
    CheckResult c;
    c.name = "(a) T(gh) = T(hg)";
    c.anchor = "dim2-axioms";
    c.origin = "definition";
    c.pass = true;
    for (int g = 0; g < m && c.pass; ++g)
      for (int h = 0; h < m && c.pass; ++h)
        if (!(law.T[table.mul(g, h)] == law.T[table.mul(h, g)])) {
          c.pass = false;
          c.witness = pair_witness(table, g, h);
        }
    report.add(std::move(c));
  }
  {
    CheckResult c;
    c.name = "(b) D(g) T(g^-1 h) - T(g) T(h) + T(gh) = 0";
    c.anchor = "dim2-axioms";
    c.origin = "definition";
    c.pass = true;
    for (int g = 0; g < m && c.pass; ++g)
      for (int h = 0; h < m && c.pass; ++h) {
        RingElem v = law.D[g] * law.T[table.mul(table.inverse(g), h)] - law.T[g] * law.T[h] +
                     law.T[table.mul(g, h)];
        if (!v.is_zero()) {
          c.pass = false;
          c.witness = pair_witness(table, g, h) + " gives " + v.str();
        }
      }
    report.add(std::move(c));
  }
  {
    CheckResult c;
    c.name = "f(g,g) = 2 D(g) and f symmetric";
    c.anchor = "dim2-bilinear-form";
    c.origin = "definition";
    c.pass = true;
    for (int g = 0; g < m && c.pass; ++g) {
      if (!(law.f(g, g) == two * law.D[g])) {
        c.pass = false;
        c.witness = "f(g,g) != 2D(g) at " + table.label(g);
      }
      for (int h = 0; h < m && c.pass; ++h)
        if (!(law.f(g, h) == law.f(h, g))) {
          c.pass = false;
          c.witness = "f not symmetric at " + pair_witness(table, g, h);
        }
    }
    report.add(std::move(c));
  }
  {
    CheckResult c;
    c.name = "(ii) f(hg, h'g) = f(h,h') D(g)";
    c.anchor = "dim2-bilinear-form";
    c.origin = "definition";
    c.pass = true;
    for (int g = 0; g < m && c.pass; ++g)
      for (int h = 0; h < m && c.pass; ++h)
        for (int h2 = 0; h2 < m && c.pass; ++h2) {
          RingElem lhs = law.f(table.mul(h, g), table.mul(h2, g));
          RingElem rhs = law.f(h, h2) * law.D[g];
          if (!(lhs == rhs)) {
            c.pass = false;
            c.witness = "(" + table.label(h) + "," + table.label(h2) + "," + table.label(g) + ")";
          }
        }
    report.add(std::move(c));
  }
  {
    CheckResult c;
    c.name = "(iii) f(hg, h'g') + f(hg', h'g) = f(h,h') f(g,g')";
    c.anchor = "dim2-bilinear-form";
    c.origin = "definition";
    c.pass = true;
    for (int g = 0; g < m && c.pass; ++g)
      for (int g2 = 0; g2 < m && c.pass; ++g2)
        for (int h = 0; h < m && c.pass; ++h)
          for (int h2 = 0; h2 < m && c.pass; ++h2) {
            RingElem lhs = law.f(table.mul(h, g), table.mul(h2, g2)) +
                           law.f(table.mul(h, g2), table.mul(h2, g));
            RingElem rhs = law.f(h, h2) * law.f(g, g2);
            if (!(lhs == rhs)) {
              c.pass = false;
              c.witness = "(" + table.label(h) + "," + table.label(h2) + "," + table.label(g) +
                          "," + table.label(g2) + ")";
            }
          }
    report.add(std::move(c));
  }
  return report;
}

RingElem dim2_eval(const Dim2Law& law, const AlgebraElem& x) {
  const RingContextPtr& ctx = x.context();
  RingElem acc = RingElem::zero(ctx);
  const auto& terms = x.terms();
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    acc = acc + embed(law.D[it->first], ctx) * it->second * it->second;
    auto jt = it;
    ++jt;
    for (; jt != terms.end(); ++jt)
      acc = acc + embed(law.f(it->first, jt->first), ctx) * it->second * jt->second;
  }
  return acc;
}

namespace {

class Dim2LawImpl final : public LawImpl {
 public:
  explicit Dim2LawImpl(Dim2Law law) : law_(std::move(law)) {}
  int dim() const override { return 2; }
  RingContextPtr base_context() const override { return law_.ctx; }
  MonoidPtr table() const override { return law_.table; }
  std::string describe() const override { return "dimension-2 law from a (T,D) pair"; }
  RingElem eval(const AlgebraElem& x) const override { return dim2_eval(law_, x); }

  RingElem lambda(const AlgebraElem& x, int i) const override {
    const RingContextPtr& ctx = x.context();
    if (i == 0) return RingElem::one(ctx);
    if (i == 1) {
      RingElem acc = RingElem::zero(ctx);
      for (const auto& [g, c] : x.terms()) acc = acc + embed(law_.T[g], ctx) * c;
      return acc;
    }
    if (i == 2) return dim2_eval(law_, x);
    return RingElem::zero(ctx);
  }

 private:
  Dim2Law law_;
};

}  // namespace

DeterminantLaw dim2_determinant(const Dim2Law& law) {
  return DeterminantLaw::from_impl(std::make_shared<Dim2LawImpl>(law));
}

Dim2Law dim2_from_rep(const MatrixRep& rep) {
  if (rep.dim() != 2) fail("DimensionMismatch", "need a 2-dimensional representation");
  Dim2Law law;
  law.table = rep.table();
  law.ctx = rep.context();
  for (int g = 0; g < rep.table()->size(); ++g) {
    law.T.push_back(rep.image(g).trace());
    law.D.push_back(det(rep.image(g)));
  }
  return law;
}

Dim2Law dim2_from_pseudochar(const CentralFunction& T) {
  const RingContextPtr& ctx = T.context();
  const FiniteMonoidTable& table = *T.table();
  RingElem two = RingElem::from_int(ctx, 2);
  if (!two.is_unit()) fail("TwoNotInvertible", "2 is not a unit in " + ctx->describe());
  if (!(T.value(table.identity()) == two)) fail("InvalidInput", "T(1) != 2");
  Report id = pseudochar_identity_check(T, 2, std::nullopt);
  if (!id.all_pass())
    fail("PseudocharIdentityFails", id.checks[0].witness);
  RingElem half = two.inv();
  Dim2Law law;
  law.table = T.table();
  law.ctx = ctx;
  for (int g = 0; g < table.size(); ++g) {
    int g2 = table.mul(g, g);
    law.T.push_back(T.value(g));
    law.D.push_back((T.value(g) * T.value(g) - T.value(g2)) * half);
  }
  Report axioms = verify_dim2_axioms(law);
  if (!axioms.all_pass()) {
    for (const auto& c : axioms.checks)
      if (!c.pass) fail("AxiomFails", c.name + " at " + c.witness);
  }
  return law;
}

Dim2Law deformation_law(const MonoidPtr& table, const RingContextPtr& base, const Deformation& d) {
  RingContextPtr dual = RingContext::dual(base);
  RingElem eps = RingElem::epsilon(dual);
  Dim2Law law;
  law.table = table;
  law.ctx = dual;
  for (int g = 0; g < table->size(); ++g) {
    law.T.push_back(RingElem::from_int(dual, 2) + eps * embed(d.tau[g], dual));
    law.D.push_back(RingElem::one(dual) + eps * embed(d.delta[g], dual));
  }
  return law;
}

namespace {

/// All elements of a finite scalar context (used to enumerate value tables
/// over F_2 and friends).
std::vector<RingElem> all_scalars(const RingContextPtr& ctx) {
  if (ctx->kind != RingKind::IntegersMod && ctx->kind != RingKind::PrimeField)
    fail("InvalidInput", "enumeration needs a finite scalar context");
  std::vector<RingElem> out;
  for (Int v = 0; v < ctx->modulus; ++v) out.push_back(RingElem::from_int(ctx, v));
  return out;
}

/// Subgroup generated by all squares; returned as a membership mask.
std::vector<bool> squares_subgroup(const FiniteMonoidTable& table) {
  int m = table.size();
  std::vector<bool> in(m, false);
  std::vector<int> stack;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      stack.push_back(x);
    }
  };
  push(table.identity());
  for (int g = 0; g < m; ++g) push(table.mul(g, g));
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < m; ++y)
      if (in[y]) {
        push(table.mul(x, y));
        push(table.mul(y, x));
      }
  }
  return in;
}

}  // namespace

DeformationEnumeration deformation_space_enumerate(const MonoidPtr& table,
                                                   const RingContextPtr& base,
                                                   std::uint64_t cap) {
  if (!(RingElem::from_int(base, 2).is_zero()))
    fail("CharacteristicNotTwo", "base must satisfy 2 = 0, got " + base->describe());
  if (!table->is_group()) fail("NoInverses", "deformation enumeration needs a group");
  int m = table->size();
  std::vector<RingElem> scalars = all_scalars(base);
  std::uint64_t q = scalars.size();

  std::uint64_t total = 1;
  for (int k = 0; k < 2 * m; ++k) {
    total *= q;
    if (total > cap) fail("EnumerationTooLarge", "|A|^(2|G|) exceeds the cap");
  }
  // tau has tau(1) = 0 fixed, delta unconstrained: q^(m-1) * q^m candidates
  std::uint64_t tau_count = 1, delta_count = 1;
  for (int k = 0; k < m - 1; ++k) tau_count *= q;
  for (int k = 0; k < m; ++k) delta_count *= q;
  std::uint64_t candidates = tau_count * delta_count;

  std::vector<char> keep(candidates, 0);
  parallel_for(candidates, [&](std::size_t idx) {
    std::uint64_t rest = idx;
    Deformation d;
    d.tau.assign(m, RingElem::zero(base));
    d.delta.assign(m, RingElem::zero(base));
    for (int g = 0; g < m; ++g) {
      if (g == table->identity()) continue;
      d.tau[g] = scalars[rest % q];
      rest /= q;
    }
    for (int g = 0; g < m; ++g) {
      d.delta[g] = scalars[rest % q];
      rest /= q;
    }
    Dim2Law law = deformation_law(table, base, d);
    keep[idx] = verify_dim2_axioms(law).all_pass() ? 1 : 0;
  });

  DeformationEnumeration out;
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    if (!keep[idx]) continue;
    std::uint64_t rest = idx;
    Deformation d;
    d.tau.assign(m, RingElem::zero(base));
    d.delta.assign(m, RingElem::zero(base));
    for (int g = 0; g < m; ++g) {
      if (g == table->identity()) continue;
      d.tau[g] = scalars[rest % q];
      rest /= q;
    }
    for (int g = 0; g < m; ++g) {
      d.delta[g] = scalars[rest % q];
      rest /= q;
    }
    out.deformations.push_back(std::move(d));
  }

  // Independent parametrization: tau and delta constant on cosets of the
  // subgroup generated by squares, tau(1) = 0, delta additive.
  std::vector<bool> sq = squares_subgroup(*table);
  auto factors_through = [&](const std::vector<RingElem>& v) {
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h)
        if (sq[h] && !(v[table->mul(g, h)] == v[g])) return false;
    return true;
  };
  int matching = 0;
  for (const auto& d : out.deformations) {
    bool ok = d.tau[table->identity()].is_zero() && factors_through(d.tau) &&
              factors_through(d.delta);
    for (int g = 0; g < m && ok; ++g)
      for (int h = 0; h < m && ok; ++h)
        if (!(d.delta[table->mul(g, h)] == d.delta[g] + d.delta[h])) ok = false;
    if (ok) ++matching;
  }
  // count the parametrization set directly: tau on G/G^2 with tau(1)=0,
  // delta in Hom(G/G^2, A)
  int cosets = 0;
  {
    std::vector<int> rep(m, -1);
    for (int g = 0; g < m; ++g) {
      bool fresh = true;
      for (int h = 0; h < g && fresh; ++h) {
        // same coset iff g = h * s for some s in the squares subgroup
        for (int s = 0; s < m; ++s)
          if (sq[s] && table->mul(h, s) == g) {
            fresh = false;
            break;
          }
      }
      if (fresh) ++cosets;
    }
  }
  std::uint64_t tau_param = 1;
  for (int k = 0; k < cosets - 1; ++k) tau_param *= q;
  // delta: homomorphisms from an elementary abelian 2-group of order
  // `cosets` to (A,+); with |A| = q = 2^e, that is q^(log2 cosets)
  int rank = 0;
  for (int c = cosets; c > 1; c /= 2) ++rank;
  std::uint64_t delta_param = 1;
  for (int k = 0; k < rank; ++k) delta_param *= q;
  out.expected_from_parametrization = static_cast<int>(tau_param * delta_param);
  out.parametrization_matches =
      matching == static_cast<int>(out.deformations.size()) &&
      static_cast<int>(out.deformations.size()) == out.expected_from_parametrization;
  return out;
}

Report factor_ideal_probe(const MonoidPtr& table, const RingContextPtr& base,
                          const Deformation& d) {
  Report report;
  report.subcommand = "factor-ideal-probe";
  const FiniteMonoidTable& t = *table;
  int m = t.size();
  Dim2Law law = deformation_law(table, base, d);
  RingContextPtr dual = law.ctx;

  // I = kernel of the trivial law D_0, through the kernel routine on the
  // trivial 2-dimensional representation.
  std::vector<Matrix> trivial_images(m, Matrix::identity(2, base));
  MatrixRep trivial_rep(2, table, std::move(trivial_images));
  Subspace I = kernel_of_det(trivial_rep);
  std::vector<AlgebraElem> spanning;
  for (const auto& row : I.basis()) spanning.push_back(vec_to_algebra_elem(row, base));

  CheckResult c;
  c.name = "products of 4 kernel generators stay in the deformed kernel";
  c.anchor = "deformation-kernel-stability";
  c.pass = true;
  if (spanning.empty()) {
    c.details = Json{{"note", "trivial group, vacuous"}};
    report.add(std::move(c));
    return report;
  }
  auto [ext, vars] = extend_with_vars(dual, 1 + m, "u");
  RingElem tvar = RingElem::variable(ext, vars[0]);
  AlgebraElem y(ext);
  for (int g = 0; g < m; ++g)
    y = y + delta(t, g, ext).scaled(RingElem::variable(ext, vars[1 + g]));
  AlgebraElem one = delta(t, t.identity(), ext);

  std::size_t s = spanning.size();
  std::size_t tuples = s * s * s * s;
  std::vector<char> ok(tuples, 1);
  parallel_for(tuples, [&](std::size_t idx) {
    std::size_t rest = idx;
    AlgebraElem x = spanning[rest % s];
    rest /= s;
    for (int k = 0; k < 3; ++k) {
      x = algebra_mul(x, spanning[rest % s], t);
      rest /= s;
    }
    AlgebraElem xe = embed_elem(x, ext);
    AlgebraElem z = one + algebra_mul(xe, y, t).scaled(tvar);
    ok[idx] = dim2_eval(law, z).is_one() ? 1 : 0;
  });
  for (std::size_t idx = 0; idx < tuples; ++idx)
    if (!ok[idx]) {
      c.pass = false;
      c.witness = "4-tuple index " + std::to_string(idx);
      break;
    }
  c.details = Json{{"tuples_checked", tuples}};
  report.add(std::move(c));
  return report;
}

OddLocusResult odd_reducibility_relation(const Matrix& c, const Matrix& g,
                                         bool expect_det_plus_one) {
  if (c.rows() != 2 || c.cols() != 2 || g.rows() != 2 || g.cols() != 2)
    fail("DimensionMismatch", "odd locus needs 2x2 matrices");
  const RingContextPtr& ctx = c.context();
  if (!same_context(ctx, g.context())) fail("ContextMismatch", "c and g over different contexts");
  if (!c.trace().is_zero())
    fail("PreconditionViolated", "tr(c) = " + c.trace().str() + ", expected 0");
  RingElem expected = expect_det_plus_one ? RingElem::one(ctx) : RingElem::one(ctx).neg();
  if (!(det(c) == expected))
    fail("PreconditionViolated", "det(c) = " + det(c).str() + ", expected " + expected.str());

  RingElem two = RingElem::from_int(ctx, 2);
  RingElem four = RingElem::from_int(ctx, 4);
  Matrix cg = c * g;
  RingElem x = g.trace() - two;
  RingElem y = cg.trace() - two;
  RingElem z = det(g) - RingElem::one(ctx);
  RingElem residual = x * x - y * y - four * (RingElem::one(ctx) - x + y + z);

  std::vector<Matrix> basis = {Matrix::identity(2, ctx), c, g, cg};
  Matrix gram(4, 4, ctx);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gram.set(i, j, (basis[i] * basis[j]).trace());
  return {residual, det(gram)};
}

Rat odd_locus_kappa() {
  RingContextPtr ctx =
      RingContext::polynomial(RingContext::rationals(), {"ga", "gb", "gc", "gd"});
  Matrix c(2, 2, ctx);
  c.set(0, 0, RingElem::one(ctx));
  c.set(1, 1, RingElem::one(ctx).neg());
  Matrix g(2, 2, ctx);
  g.set(0, 0, RingElem::variable(ctx, 0));
  g.set(0, 1, RingElem::variable(ctx, 1));
  g.set(1, 0, RingElem::variable(ctx, 2));
  g.set(1, 1, RingElem::variable(ctx, 3));
  OddLocusResult r = odd_reducibility_relation(c, g);
  RingElem res2 = r.residual * r.residual;
  // gram_det and residual^2 are proportional as polynomials; read the ratio
  // off the leading terms and verify exactly.
  const auto& terms = res2.poly_terms();
  if (terms.empty()) fail("Internal", "degenerate symbolic residual");
  const auto& [lead_mono, lead_coeff] = terms.back();
  RingElem gram_coeff = RingElem::zero(ctx->base);
  for (const auto& [m, cf] : r.gram_det.poly_terms())
    if (m == lead_mono) {
      gram_coeff = cf;
      break;
    }
  Rat kappa = gram_coeff.rat_value() / lead_coeff.rat_value();
  RingElem kap = RingElem::from_rat(ctx, kappa);
  if (!(r.gram_det == kap * res2))
    fail("Internal", "gram determinant is not a constant multiple of residual^2");
  return kappa;
}

}  // namespace detlab
