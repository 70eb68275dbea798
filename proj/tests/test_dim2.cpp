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

#include <doctest.h>

#include "detlab/ch_kernel.hpp"
#include "detlab/dim2.hpp"
#include "support.hpp"

using namespace detlab;
using namespace detlab::testsupport;

namespace {

Dim2Law trivial_law(const MonoidPtr& table, const RingContextPtr& ctx) {
  Dim2Law law;
  law.table = table;
  law.ctx = ctx;
  law.T.assign(table->size(), RingElem::from_int(ctx, 2));
  law.D.assign(table->size(), RingElem::one(ctx));
  return law;
}

}  // namespace

TEST_CASE("axioms pass for the trivial pair and rep-derived pairs") {
  auto q = RingContext::rationals();
  for (const char* name : {"z2.json", "z3.json", "z4.json", "z2xz2.json", "s3.json", "d4.json",
                           "q8.json"}) {
    auto group = corpus_group(name);
    CHECK(verify_dim2_axioms(trivial_law(group, q)).all_pass());
  }
  for (const char* name : {"rep_z2_reg_q.json", "rep_z3_rot_q.json", "rep_z4_rot_q.json",
                           "rep_v4_diag_q.json", "rep_s3_std_q.json", "rep_s3_std_f7.json",
                           "rep_d4_std_q.json", "rep_q8_std_f7.json"}) {
    CHECK(verify_dim2_axioms(dim2_from_rep(*corpus_rep(name))).all_pass());
  }
}

TEST_CASE("a perturbed trace value fails axiom (b) with a witness") {
  auto rep = corpus_rep("rep_s3_std_q.json");
  Dim2Law law = dim2_from_rep(*rep);
  law.T[3] = law.T[3] + RingElem::one(law.ctx);
  Report r = verify_dim2_axioms(law);
  CHECK_FALSE(r.all_pass());
  bool b_failed = false;
  for (const auto& c : r.checks)
    if (!c.pass && c.name.find("(b)") != std::string::npos && !c.witness.empty()) b_failed = true;
  CHECK(b_failed);
}

TEST_CASE("quadratic evaluation") {
  auto rep = corpus_rep("rep_s3_std_q.json");
  Dim2Law law = dim2_from_rep(*rep);
  const FiniteMonoidTable& table = *rep->table();
  auto q = rep->context();
  {
    // single term: D(t g) = D(g) t^2
    auto [ext, vars] = extend_with_vars(q, 1);
    RingElem t = RingElem::variable(ext, vars[0]);
    AlgebraElem x = delta(table, 2, ext).scaled(t);
    CHECK(dim2_eval(law, x) == embed(law.D[2], ext) * t * t);
  }
  {
    // two terms match the symbolic 2x2 determinant
    auto [ext, vars] = extend_with_vars(q, 2, "UV");
    RingElem u = RingElem::variable(ext, vars[0]), v = RingElem::variable(ext, vars[1]);
    for (int g = 0; g < table.size(); ++g)
      for (int h = 0; h < table.size(); ++h) {
        AlgebraElem x = delta(table, g, ext).scaled(u) + delta(table, h, ext).scaled(v);
        Matrix img = embed_matrix(rep->image(g), ext).scaled(u) +
                     embed_matrix(rep->image(h), ext).scaled(v);
        CHECK(dim2_eval(law, x) == cofactor_det(img));
      }
  }
  {
    // trivial law: D(e + t g) = (1 + t)^2
    auto z2 = corpus_group("z2.json");
    Dim2Law triv = trivial_law(z2, q);
    auto [ext, vars] = extend_with_vars(q, 1);
    RingElem t = RingElem::variable(ext, vars[0]);
    AlgebraElem x = delta(*z2, 0, ext) + delta(*z2, 1, ext).scaled(t);
    RingElem one = RingElem::one(ext);
    CHECK(dim2_eval(triv, x) == (one + t) * (one + t));
  }
}

TEST_CASE("the wrapped law agrees with the matrix law symbolically") {
  auto rep = corpus_rep("rep_d4_std_q.json");
  Dim2Law law = dim2_from_rep(*rep);
  DeterminantLaw as_law = dim2_determinant(law);
  DeterminantLaw matrix_law = DeterminantLaw::matrix_det(rep);
  GenericElement g = generic_element({0, 3, 5}, *rep->table(), rep->context());
  CHECK(as_law.eval(g.elem) == matrix_law.eval(g.elem));
  for (int i = 0; i <= 2; ++i) CHECK(as_law.lambda(g.elem, i) == matrix_law.lambda(g.elem, i));
}

TEST_CASE("reconstruction from the trace") {
  {
    // over F7: D values match the matrix determinants
    auto rep = corpus_rep("rep_s3_std_f7.json");
    CentralFunction T = CentralFunction::from_rep_trace(*rep, 2);
    Dim2Law law = dim2_from_pseudochar(T);
    for (int g = 0; g < rep->table()->size(); ++g) CHECK(law.D[g] == det(rep->image(g)));
  }
  {
    // constant trace 2 gives the trivial determinant
    auto z4 = corpus_group("z4.json");
    auto q = RingContext::rationals();
    CentralFunction T(z4, std::vector<RingElem>(4, RingElem::from_int(q, 2)), 2);
    Dim2Law law = dim2_from_pseudochar(T);
    for (int g = 0; g < 4; ++g) CHECK(law.D[g].is_one());
  }
  {
    // sum of two distinct cube-root characters over F7: D = product character
    auto rep = corpus_rep("rep_z3_chars_f7.json");
    CentralFunction T = CentralFunction::from_rep_trace(*rep, 2);
    Dim2Law law = dim2_from_pseudochar(T);
    auto f7 = rep->context();
    // chi1 chi2 (g) = 2 * 4 = 1 mod 7
    CHECK(law.D[1] == RingElem::one(f7));
    CHECK(law.D[2] == RingElem::one(f7));
  }
  {
    // a central class function that is not a pseudocharacter is rejected:
    // T = 2 on the identity and 1 elsewhere fails on a transposition triple
    auto s3 = corpus_group("s3.json");
    auto q = RingContext::rationals();
    std::vector<RingElem> values(6, RingElem::one(q));
    values[0] = RingElem::from_int(q, 2);
    CentralFunction bad(s3, values, std::nullopt);
    CHECK_THROWS_WITH_AS(dim2_from_pseudochar(bad),
                         doctest::Contains("PseudocharIdentityFails"), Error);
  }
  {
    // 2 must be invertible
    auto f2 = RingContext::prime_field(2);
    auto z2 = corpus_group("z2.json");
    CentralFunction T(z2, std::vector<RingElem>(2, RingElem::zero(f2)), std::nullopt);
    CHECK_THROWS_WITH_AS(dim2_from_pseudochar(T), doctest::Contains("TwoNotInvertible"), Error);
  }
}

TEST_CASE("deformation counts over the dual numbers in characteristic 2") {
  auto f2 = RingContext::prime_field(2);
  {
    auto trivial = std::make_shared<FiniteMonoidTable>(std::vector<std::vector<int>>{{0}}, 0);
    auto e = deformation_space_enumerate(trivial, f2);
    CHECK(e.deformations.size() == 1);
    CHECK(e.parametrization_matches);
  }
  {
    auto e = deformation_space_enumerate(corpus_group("z4.json"), f2);
    CHECK(e.deformations.size() == 4);
    CHECK(e.parametrization_matches);
  }
  {
    auto e = deformation_space_enumerate(corpus_group("z2xz2.json"), f2);
    CHECK(e.deformations.size() == 32);
    CHECK(e.parametrization_matches);
  }
  CHECK_THROWS_WITH_AS(deformation_space_enumerate(corpus_group("z2.json"),
                                                   RingContext::prime_field(3)),
                       doctest::Contains("CharacteristicNotTwo"), Error);
}

TEST_CASE("deformations satisfy the product rule of the eps part") {
  // D = D0 + eps Delta multiplicative forces
  // Delta(xy) = D0(x) Delta(y) + D0(y) Delta(x) on generic elements
  auto f2 = RingContext::prime_field(2);
  auto z4 = corpus_group("z4.json");
  auto e = deformation_space_enumerate(z4, f2);
  for (const auto& d : e.deformations) {
    Dim2Law law = deformation_law(z4, f2, d);
    auto [ext, vars] = extend_with_vars(law.ctx, 4, "xy");
    AlgebraElem x = delta(*z4, 0, ext).scaled(RingElem::variable(ext, vars[0])) +
                    delta(*z4, 1, ext).scaled(RingElem::variable(ext, vars[1]));
    AlgebraElem y = delta(*z4, 2, ext).scaled(RingElem::variable(ext, vars[2])) +
                    delta(*z4, 3, ext).scaled(RingElem::variable(ext, vars[3]));
    AlgebraElem xy = algebra_mul(x, y, *z4);
    auto eps_part = [&](const RingElem& v) {
      // coefficients live in Poly(Dual(F2)); split off the eps component
      RingElem out = RingElem::zero(ext);
      for (const auto& [mono, coeff] : v.poly_terms()) {
        RingElem e_coeff = coeff.dual_eps();
        if (!e_coeff.is_zero())
          out = out + RingElem::make_poly(
                          ext, {{mono, RingElem::make_dual(ext->base, e_coeff,
                                                           RingElem::zero(f2))}});
      }
      return out;
    };
    auto d0_part = [&](const RingElem& v) {
      RingElem out = RingElem::zero(ext);
      for (const auto& [mono, coeff] : v.poly_terms()) {
        RingElem c0 = coeff.dual_constant();
        if (!c0.is_zero())
          out = out + RingElem::make_poly(
                          ext, {{mono, RingElem::make_dual(ext->base, c0, RingElem::zero(f2))}});
      }
      return out;
    };
    RingElem dxy = dim2_eval(law, xy);
    RingElem dx = dim2_eval(law, x), dy = dim2_eval(law, y);
    CHECK(eps_part(dxy) == d0_part(dx) * eps_part(dy) + d0_part(dy) * eps_part(dx));
  }
}

TEST_CASE("kernel powers fall into the deformed kernel") {
  auto f2 = RingContext::prime_field(2);
  {
    auto trivial = std::make_shared<FiniteMonoidTable>(std::vector<std::vector<int>>{{0}}, 0);
    Deformation d{{RingElem::zero(f2)}, {RingElem::zero(f2)}};
    CHECK(factor_ideal_probe(trivial, f2, d).all_pass());
  }
  {
    auto z2 = corpus_group("z2.json");
    Deformation d{{RingElem::zero(f2), RingElem::one(f2)},
                  {RingElem::zero(f2), RingElem::zero(f2)}};
    // tau = indicator of g factors through G/G^2 = G; valid deformation
    Dim2Law law = deformation_law(z2, f2, d);
    REQUIRE(verify_dim2_axioms(law).all_pass());
    CHECK(factor_ideal_probe(z2, f2, d).all_pass());
  }
  {
    auto z4 = corpus_group("z4.json");
    for (const auto& d : deformation_space_enumerate(z4, f2).deformations)
      CHECK(factor_ideal_probe(z4, f2, d).all_pass());
  }
}

TEST_CASE("odd locus coordinates on fixed pairs") {
  auto q = RingContext::rationals();
  Matrix c(2, 2, q);
  c.set(0, 0, RingElem::one(q));
  c.set(1, 1, RingElem::from_int(q, -1));
  {
    // diagonal g is reducible together with c: both invariants vanish
    auto ctx = RingContext::polynomial(q, {"a", "b"});
    Matrix cs = embed_matrix(c, ctx);
    Matrix g(2, 2, ctx);
    g.set(0, 0, RingElem::variable(ctx, 0));
    g.set(1, 1, RingElem::variable(ctx, 1));
    OddLocusResult r = odd_reducibility_relation(cs, g);
    CHECK(r.residual.is_zero());
    CHECK(r.gram_det.is_zero());
  }
  {
    Matrix g(2, 2, q);
    g.set(0, 0, RingElem::one(q));
    g.set(0, 1, RingElem::one(q));
    g.set(1, 0, RingElem::one(q));
    OddLocusResult r = odd_reducibility_relation(c, g);
    CHECK_FALSE(r.residual.is_zero());
    CHECK_FALSE(r.gram_det.is_zero());
    CHECK(r.residual == RingElem::from_int(q, 4));
  }
  {
    // g = 1: x = 0, y = -2, z = 0 and the residual vanishes
    OddLocusResult r = odd_reducibility_relation(c, Matrix::identity(2, q));
    CHECK(r.residual.is_zero());
    CHECK(r.gram_det.is_zero());
  }
  {
    // precondition: tr(c) = 0 and det(c) = -1
    CHECK_THROWS_WITH_AS(odd_reducibility_relation(Matrix::identity(2, q), c),
                         doctest::Contains("PreconditionViolated"), Error);
    // the +1 convention is reachable behind the flag
    Matrix c_plus(2, 2, q);  // rotation: tr = 0, det = +1
    c_plus.set(0, 1, RingElem::from_int(q, -1));
    c_plus.set(1, 0, RingElem::one(q));
    CHECK_THROWS_AS(odd_reducibility_relation(c_plus, Matrix::identity(2, q)), Error);
    CHECK_NOTHROW(odd_reducibility_relation(c_plus, Matrix::identity(2, q), true));
  }
}

TEST_CASE("gram determinant is a fixed multiple of the squared residual") {
  Rat kappa = odd_locus_kappa();
  CHECK(kappa == Rat(-1));
  auto q = RingContext::rationals();
  Rng rng(67);
  for (int t = 0; t < 100; ++t) {
    // random conjugate of diag(1,-1) keeps tr = 0, det = -1
    long long a, b, cc, dd;
    do {
      a = rng.range(-5, 5);
      b = rng.range(-5, 5);
      cc = rng.range(-5, 5);
      dd = rng.range(-5, 5);
    } while (a * dd - b * cc == 0);
    Rat dp(a * dd - b * cc);
    Matrix c(2, 2, q);
    c.set(0, 0, RingElem::from_rat(q, Rat(a * dd + b * cc) / dp));
    c.set(0, 1, RingElem::from_rat(q, Rat(-2 * a * b) / dp));
    c.set(1, 0, RingElem::from_rat(q, Rat(2 * cc * dd) / dp));
    c.set(1, 1, RingElem::from_rat(q, Rat(-(a * dd + b * cc)) / dp));
    Matrix g = random_int_matrix(2, q, rng);
    OddLocusResult r = odd_reducibility_relation(c, g);
    CHECK(r.gram_det == RingElem::from_rat(q, kappa) * r.residual * r.residual);
    CHECK(r.residual.is_zero() == r.gram_det.is_zero());
  }
}
