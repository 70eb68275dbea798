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
#include "support.hpp"

using namespace detlab;
using namespace detlab::testsupport;

namespace {

AlgebraLaw matrix_det_law(const FinDimAlgebra& alg, int n, const RingContextPtr& ctx,
                          bool upper_triangular = false) {
  return algebra_law_from_matrices(
      alg, upper_triangular ? upper_triangular_basis(n, ctx) : matrix_algebra_basis(n, ctx), n);
}

}  // namespace

TEST_CASE("chi vanishes on full matrix algebras") {
  for (int d = 2; d <= 4; ++d) {
    for (bool mod7 : {false, true}) {
      auto ctx = mod7 ? RingContext::prime_field(7) : RingContext::integers();
      auto alg = full_matrix_algebra(d, ctx);
      AlgebraLaw law = matrix_det_law(alg, d, ctx);
      Rng rng = Rng::derive(71, d * 2 + mod7);
      for (int t = 0; t < 50; ++t) {
        AlgVec r;
        for (int k = 0; k < alg.dim(); ++k)
          r.push_back(RingElem::from_int(ctx, rng.range(-9, 9)));
        CHECK(alg.is_zero_vec(chi_eval(law, r)));
      }
    }
  }
}

TEST_CASE("chi vanishes on upper-triangular algebras under the restricted law") {
  for (int d = 2; d <= 3; ++d) {
    auto q = RingContext::rationals();
    auto alg = upper_triangular_algebra(d, q);
    AlgebraLaw law = matrix_det_law(alg, d, q, true);
    Rng rng = Rng::derive(73, d);
    for (int t = 0; t < 50; ++t) {
      AlgVec r;
      for (int k = 0; k < alg.dim(); ++k) r.push_back(RingElem::from_int(q, rng.range(-9, 9)));
      CHECK(alg.is_zero_vec(chi_eval(law, r)));
    }
  }
}

TEST_CASE("chi of a group element points along the kernel") {
  auto rep = corpus_rep("rep_z3_rot_q.json");
  auto q = rep->context();
  FinDimAlgebra ga = group_algebra_findim(rep->table(), q);
  AlgebraLaw law = algebra_law_from_det_law(ga, DeterminantLaw::matrix_det(rep));
  AlgVec chi_g = chi_eval(law, ga.basis_vec(1, q));
  // chi(g) = g^2 + g + 1 for the rotation trace -1, det 1
  AlgVec expected = ga.add(ga.add(ga.basis_vec(0, q), ga.basis_vec(1, q)), ga.basis_vec(2, q));
  CHECK(ga.vec_eq(chi_g, expected));
  CHECK_FALSE(ga.is_zero_vec(chi_g));
  Subspace kernel = kernel_of_det(*rep);
  CHECK(kernel.contains(chi_g));
}

TEST_CASE("multilinear chi coefficients") {
  auto q = RingContext::rationals();
  auto alg = full_matrix_algebra(2, q);
  AlgebraLaw law = matrix_det_law(alg, 2, q);
  Rng rng(79);
  auto random_vec = [&]() {
    AlgVec r;
    for (int k = 0; k < 4; ++k) r.push_back(RingElem::from_int(q, rng.range(-5, 5)));
    return r;
  };
  for (int t = 0; t < 20; ++t) {
    AlgVec r1 = random_vec(), r2 = random_vec();
    // alpha = (d) collapses to chi itself
    CHECK(alg.vec_eq(chi_alpha(law, {r1}, {2}), chi_eval(law, r1)));
    // the mixed coefficient matches its closed expansion
    AlgVec mixed = chi_alpha(law, {r1, r2}, {1, 1});
    RingElem l1 = law.lambda(r1, 1), l2 = law.lambda(r2, 1);
    RingElem l12 = law.lambda(alg.mul(r1, r2), 1);
    AlgVec expected = alg.add(alg.mul(r1, r2), alg.mul(r2, r1));
    expected = alg.sub(expected, alg.scale(r2, l1));
    expected = alg.sub(expected, alg.scale(r1, l2));
    expected = alg.add(expected, alg.scale(alg.one(q), l1 * l2 - l12));
    CHECK(alg.vec_eq(mixed, expected));
    // every polarized coefficient vanishes on the matrix algebra
    CHECK(alg.is_zero_vec(mixed));
    CHECK_THROWS_WITH_AS(chi_alpha(law, {r1, r2}, {1, 2}), doctest::Contains("DegreeMismatch"),
                         Error);
  }
}

TEST_CASE("CH ideal dimensions on the corpus examples") {
  {
    // M2(F7) with its own determinant: the zero ideal
    auto f7 = RingContext::prime_field(7);
    auto alg = full_matrix_algebra(2, f7);
    CHECK(ch_ideal(matrix_det_law(alg, 2, f7)).dim() == 0);
  }
  {
    // F7[S3] under the 2-dim law: codimension 4 quotient
    auto rep = corpus_rep("rep_s3_std_f7.json");
    FinDimAlgebra ga = group_algebra_findim(rep->table(), rep->context());
    AlgebraLaw law = algebra_law_from_det_law(ga, DeterminantLaw::matrix_det(rep));
    Subspace ideal = ch_ideal(law);
    CHECK(ideal.dim() == 2);
    CHECK(ga.dim() - ideal.dim() == 4);
  }
  {
    // Q[Z2] under the regular-representation law is already Cayley-Hamilton
    auto rep = corpus_rep("rep_z2_reg_q.json");
    FinDimAlgebra ga = group_algebra_findim(rep->table(), rep->context());
    AlgebraLaw law = algebra_law_from_det_law(ga, DeterminantLaw::matrix_det(rep));
    CHECK(ch_ideal(law).dim() == 0);
  }
}

TEST_CASE("generation with tuples up to d matches up to d+1") {
  auto rep = corpus_rep("rep_s3_std_f7.json");
  FinDimAlgebra ga = group_algebra_findim(rep->table(), rep->context());
  AlgebraLaw law = algebra_law_from_det_law(ga, DeterminantLaw::matrix_det(rep));
  Subspace with_d = ch_ideal(law, 2);
  Subspace with_d1 = ch_ideal(law, 3);
  CHECK(with_d.same_subspace(with_d1));
}

TEST_CASE("dimension-1 CH quotients collapse to the base") {
  // CH ideal of a character law has codimension 1
  auto z3 = corpus_group("z3.json");
  auto f7 = RingContext::prime_field(7);
  DeterminantLaw chi = DeterminantLaw::character(
      z3, {RingElem::one(f7), RingElem::from_int(f7, 2), RingElem::from_int(f7, 4)});
  FinDimAlgebra ga = group_algebra_findim(z3, f7);
  AlgebraLaw law = algebra_law_from_det_law(ga, chi);
  Subspace ideal = ch_ideal(law);
  CHECK(ga.dim() - ideal.dim() == 1);
}

TEST_CASE("radical via the regular trace form") {
  auto q = RingContext::rationals();
  CHECK(radical(full_matrix_algebra(2, q)).dim() == 0);
  {
    // strict upper triangle of T2
    Subspace rad = radical(upper_triangular_algebra(2, q));
    CHECK(rad.dim() == 1);
    // basis order: E11, E12, E22 -> the radical is the middle coordinate
    std::vector<RingElem> e12 = {RingElem::zero(q), RingElem::one(q), RingElem::zero(q)};
    CHECK(rad.contains(e12));
  }
  {
    auto z2 = corpus_group("z2.json");
    CHECK(radical(group_algebra_findim(z2, q)).dim() == 0);
    // the guard excludes F2[Z2]
    CHECK_THROWS_WITH_AS(radical(group_algebra_findim(z2, RingContext::prime_field(2))),
                         doctest::Contains("CharacteristicTooSmall"), Error);
  }
}

TEST_CASE("kernel of the determinant on monoid algebras") {
  {
    // faithful irreducible 2-dim law on S3: kernel has dimension 6 - 4 = 2
    auto rep = corpus_rep("rep_s3_std_q.json");
    Subspace kernel = kernel_of_det(*rep);
    CHECK(kernel.dim() == 2);
  }
  {
    // trivial 2-dim rep: kernel = augmentation ideal
    auto rep = corpus_rep("rep_z2_triv2_q.json");
    Subspace kernel = kernel_of_det(*rep);
    CHECK(kernel.dim() == 1);
    auto q = rep->context();
    std::vector<RingElem> diff = {RingElem::one(q), RingElem::from_int(q, -1)};
    CHECK(kernel.contains(diff));
  }
  {
    // dimension-1 trivial representation: the full augmentation ideal
    auto z3 = corpus_group("z3.json");
    auto q = RingContext::rationals();
    MatrixRep rep(1, z3, std::vector<Matrix>(3, Matrix::identity(1, q)));
    Subspace kernel = kernel_of_det(rep);
    CHECK(kernel.dim() == 2);
    std::vector<RingElem> diff = {RingElem::one(q), RingElem::from_int(q, -1),
                                  RingElem::zero(q)};
    CHECK(kernel.contains(diff));
  }
  {
    // trivial group: zero kernel
    auto t = std::make_shared<FiniteMonoidTable>(std::vector<std::vector<int>>{{0}}, 0);
    auto q = RingContext::rationals();
    MatrixRep rep(2, t, {Matrix::identity(2, q)});
    CHECK(kernel_of_det(rep).dim() == 0);
  }
}

TEST_CASE("CH ideal sits inside the kernel and the image radical is nilpotent") {
  for (const char* name : {"rep_z2_reg_q.json", "rep_z3_rot_q.json", "rep_z3_chars_f7.json",
                           "rep_z4_rot_q.json", "rep_v4_diag_q.json", "rep_s3_std_q.json",
                           "rep_s3_std_f7.json", "rep_d4_std_q.json", "rep_q8_std_f7.json"}) {
    auto rep = corpus_rep(name);
    FinDimAlgebra ga = group_algebra_findim(rep->table(), rep->context());
    AlgebraLaw law = algebra_law_from_det_law(ga, DeterminantLaw::matrix_det(rep));
    Subspace kernel = kernel_of_det(*rep);
    Subspace ideal = ch_ideal(law);
    CHECK(kernel.contains_subspace(ideal));

    ImageAlgebra img = image_algebra(*rep);
    Subspace rad = radical(img.algebra);
    // all d-fold products of radical spanning elements vanish
    std::vector<AlgVec> current;
    for (const auto& r : rad.basis()) current.push_back(r);
    for (int step = 1; step < rep->dim(); ++step) {
      std::vector<AlgVec> next;
      for (const auto& a : current)
        for (const auto& b : rad.basis()) next.push_back(img.algebra.mul(a, b));
      current = std::move(next);
    }
    for (const auto& v : current) CHECK(img.algebra.is_zero_vec(v));
  }
}

TEST_CASE("nilpotency through the characteristic polynomial") {
  auto q = RingContext::rationals();
  Rng rng(83);
  int found = 0;
  while (found < 100) {
    // random nilpotent 3x3: strictly upper triangular conjugated by a random
    // unimodular-ish integer matrix
    Matrix n(3, 3, q);
    n.set(0, 1, RingElem::from_int(q, rng.range(-4, 4)));
    n.set(0, 2, RingElem::from_int(q, rng.range(-4, 4)));
    n.set(1, 2, RingElem::from_int(q, rng.range(-4, 4)));
    Matrix p = random_int_matrix(3, q, rng, -3, 3);
    RingElem dp = det(p);
    if (dp.is_zero()) continue;
    ++found;
    // x = p n p^-1 computed as p n adj(p) / det(p): realized by scaling
    Matrix adj(3, 3, q);
    // adjugate through the cofactor oracle
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Matrix minor(2, 2, q);
        int rr = 0;
        for (int r = 0; r < 3; ++r) {
          if (r == j) continue;
          int cc = 0;
          for (int col = 0; col < 3; ++col) {
            if (col == i) continue;
            minor.set(rr, cc++, p.at(r, col));
          }
          ++rr;
        }
        RingElem cof = cofactor_det(minor);
        adj.set(i, j, (i + j) % 2 == 0 ? cof : cof.neg());
      }
    Matrix x = (p * n * adj).scaled(dp.inv());
    auto chi = berkowitz_charpoly(x);
    for (int i = 1; i <= 3; ++i) CHECK(chi[i].is_zero());  // charpoly t^3
    // and conversely charpoly t^3 forces x^3 = 0
    Matrix zero(3, 3, q);
    CHECK(x * x * x == zero);
  }
}

TEST_CASE("generated-algebra dimensions") {
  auto q = RingContext::rationals();
  CHECK(subalgebra_span({Matrix::identity(2, q)}) == 1);
  {
    auto rep = corpus_rep("rep_s3_std_q.json");
    CHECK(subalgebra_span(rep->images()) == 4);
  }
  {
    Matrix a(2, 2, q), b(2, 2, q);
    a.set(0, 0, RingElem::from_int(q, 1));
    a.set(1, 1, RingElem::from_int(q, 2));
    b.set(0, 0, RingElem::from_int(q, 3));
    b.set(1, 1, RingElem::from_int(q, 5));
    CHECK(subalgebra_span({a, b}) == 2);
  }
}

TEST_CASE("gram certificates match the generated-algebra criterion") {
  struct Case {
    const char* file;
    bool expect_certificate;
  };
  for (Case c : {Case{"rep_s3_std_q.json", true}, Case{"rep_s3_std_f7.json", true},
                 Case{"rep_z3_chars_f7.json", false}, Case{"rep_q8_std_f7.json", true},
                 Case{"rep_v4_diag_q.json", false}, Case{"rep_z2_triv2_q.json", false}}) {
    auto rep = corpus_rep(c.file);
    DeterminantLaw law = DeterminantLaw::matrix_det(rep);
    GramCertificate cert = gram_irreducibility(law);
    int span = subalgebra_span(rep->images());
    CHECK(cert.found == c.expect_certificate);
    CHECK(cert.found == (span == rep->dim() * rep->dim()));
    if (cert.found) CHECK(static_cast<int>(cert.elements.size()) == rep->dim() * rep->dim());
  }
  {
    // dimension-1 nontrivial character: the identity alone certifies
    auto z3 = corpus_group("z3.json");
    auto f7 = RingContext::prime_field(7);
    DeterminantLaw chi = DeterminantLaw::character(
        z3, {RingElem::one(f7), RingElem::from_int(f7, 2), RingElem::from_int(f7, 4)});
    GramCertificate cert = gram_irreducibility(chi);
    CHECK(cert.found);
    CHECK(cert.elements.size() == 1);
  }
}
