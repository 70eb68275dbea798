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

#include "detlab/dim2.hpp"
#include "detlab/laws.hpp"
#include "detlab/pseudochar.hpp"
#include "support.hpp"

using namespace detlab;
using namespace detlab::testsupport;

TEST_CASE("charpoly of small fixed matrices") {
  auto z = RingContext::integers();
  {
    // I2: t^2 - 2t + 1
    auto c = berkowitz_charpoly(Matrix::identity(2, z));
    CHECK(c[0] == RingElem::from_int(z, 1));
    CHECK(c[1] == RingElem::from_int(z, -2));
    CHECK(c[2] == RingElem::from_int(z, 1));
  }
  {
    // rotation by 90 degrees: t^2 + 1
    Matrix m(2, 2, z);
    m.set(0, 1, RingElem::one(z));
    m.set(1, 0, RingElem::from_int(z, -1));
    auto c = berkowitz_charpoly(m);
    CHECK(c[1].is_zero());
    CHECK(c[2] == RingElem::one(z));
    CHECK(det(m) == RingElem::one(z));
    CHECK(matrix_lambda(m, 2) == RingElem::one(z));
    CHECK(matrix_lambda(m, 3).is_zero());
  }
  {
    // companion matrix of t^2 - s t + p keeps its symbolic coefficients
    auto ctx = RingContext::polynomial(z, {"s", "p"});
    Matrix m(2, 2, ctx);
    m.set(0, 1, RingElem::variable(ctx, 1).neg());
    m.set(1, 0, RingElem::one(ctx));
    m.set(1, 1, RingElem::variable(ctx, 0));
    auto c = berkowitz_charpoly(m);
    CHECK(c[1] == RingElem::variable(ctx, 0).neg());
    CHECK(c[2] == RingElem::variable(ctx, 1));
    // agrees with the cofactor oracle
    auto oracle = cofactor_charpoly(m);
    for (int i = 0; i <= 2; ++i) CHECK(c[i] == oracle[i]);
  }
  CHECK_THROWS_WITH_AS(berkowitz_charpoly(Matrix(2, 3, z)), doctest::Contains("NonSquare"), Error);
}

TEST_CASE("charpoly matches the cofactor oracle on random integer matrices") {
  auto z = RingContext::integers();
  for (int d = 1; d <= 4; ++d) {
    Rng rng = Rng::derive(99, d);
    for (int t = 0; t < 200; ++t) {
      Matrix m = random_int_matrix(d, z, rng);
      auto fast = berkowitz_charpoly(m);
      auto oracle = cofactor_charpoly(m);
      for (int i = 0; i <= d; ++i) CHECK(fast[i] == oracle[i]);
    }
  }
}

TEST_CASE("charpoly works over composite moduli and dual numbers") {
  {
    auto z4 = RingContext::integers_mod(4);
    Rng rng(8);
    Matrix m = random_int_matrix(3, z4, rng, 0, 3);
    auto fast = berkowitz_charpoly(m);
    auto oracle = cofactor_charpoly(m);
    for (int i = 0; i <= 3; ++i) CHECK(fast[i] == oracle[i]);
  }
  {
    auto dq = RingContext::dual(RingContext::rationals());
    Matrix m(2, 2, dq);
    m.set(0, 0, RingElem::one(dq) + RingElem::epsilon(dq));
    m.set(1, 1, RingElem::one(dq) - RingElem::epsilon(dq));
    // det = (1+e)(1-e) = 1
    CHECK(det(m) == RingElem::one(dq));
  }
}

TEST_CASE("representation validation") {
  auto z2 = corpus_group("z2.json");
  auto z = RingContext::integers();
  Matrix bad(2, 2, z);
  bad.set(0, 0, RingElem::from_int(z, 2));
  CHECK_THROWS_WITH_AS(MatrixRep(2, z2, {Matrix::identity(2, z), bad}),
                       doctest::Contains("NotAHomomorphism"), Error);
}

TEST_CASE("determinant law on corpus representations") {
  auto rep = corpus_rep("rep_s3_std_q.json");
  DeterminantLaw law = DeterminantLaw::matrix_det(rep);
  const FiniteMonoidTable& table = *rep->table();
  auto q = rep->context();

  CHECK(law.eval(delta(table, table.identity(), q)).is_one());

  // D(t e - g) for the trivial image is (t - 1)^2
  auto triv = corpus_rep("rep_z2_triv2_q.json");
  DeterminantLaw tlaw = DeterminantLaw::matrix_det(triv);
  auto [ext, vars] = extend_with_vars(triv->context(), 1);
  RingElem t = RingElem::variable(ext, vars[0]);
  AlgebraElem x = delta(*triv->table(), 0, ext).scaled(t) - delta(*triv->table(), 1, ext);
  CHECK(tlaw.eval(x) == (t - RingElem::one(ext)) * (t - RingElem::one(ext)));

  // dimension-1 character: D(1 - t g) = 1 - chi(g) t
  auto z3 = corpus_group("z3.json");
  auto f7 = RingContext::prime_field(7);
  DeterminantLaw chi = DeterminantLaw::character(
      z3, {RingElem::one(f7), RingElem::from_int(f7, 2), RingElem::from_int(f7, 4)});
  auto [e7, v7] = extend_with_vars(f7, 1);
  RingElem t7 = RingElem::variable(e7, v7[0]);
  AlgebraElem y = delta(*z3, 0, e7) - delta(*z3, 1, e7).scaled(t7);
  CHECK(chi.eval(y) == RingElem::one(e7) - RingElem::from_int(e7, 2) * t7);
}

TEST_CASE("lambda coefficients match the charpoly of the image") {
  auto rep = corpus_rep("rep_s3_std_q.json");
  DeterminantLaw law = DeterminantLaw::matrix_det(rep);
  for (int g = 0; g < rep->table()->size(); ++g) {
    auto from_law = law.charpoly_element(g);
    auto from_matrix = berkowitz_charpoly(rep->image(g));
    for (int i = 0; i <= 2; ++i) CHECK(from_law[i] == from_matrix[i]);
  }
  // Lambda_1 of the identity is the dimension
  CHECK(law.lambda_element(rep->table()->identity(), 1) ==
        RingElem::from_int(rep->context(), 2));
  // degree bound
  CHECK(law.lambda_element(1, 3).is_zero());
}

TEST_CASE("power laws multiply dimensions and stay multiplicative") {
  auto rep = corpus_rep("rep_s3_std_q.json");
  DeterminantLaw law = DeterminantLaw::matrix_det(rep);
  DeterminantLaw squared = DeterminantLaw::power(law, 2);
  CHECK(squared.dim() == 4);
  Report r = law_identity_fuzz(squared, {"multiplicativity", "swap"}, 4, 7);
  CHECK(r.all_pass());
  // Lambda beyond the doubled dimension vanishes
  auto q = rep->context();
  AlgebraElem g = delta(*rep->table(), 1, q);
  CHECK(squared.lambda(g, 5).is_zero());
  CHECK(squared.lambda(g, 4) == law.lambda(g, 2) * law.lambda(g, 2));
}

TEST_CASE("law validation and homogeneity") {
  for (const char* name : {"rep_s3_std_q.json", "rep_z4_rot_q.json", "rep_q8_std_f7.json"}) {
    auto rep = corpus_rep(name);
    CHECK(validate_law(DeterminantLaw::matrix_det(rep)).all_pass());
  }
}

TEST_CASE("identity fuzz flags a corrupted law") {
  auto rep = corpus_rep("rep_s3_std_q.json");
  Dim2Law good = dim2_from_rep(*rep);
  Dim2Law bad = good;
  bad.D[2] = bad.D[2] + RingElem::one(bad.ctx);  // perturb one determinant value
  Report r = law_identity_fuzz(dim2_determinant(bad), {"multiplicativity"}, 8, 3);
  CHECK_FALSE(r.all_pass());
  bool has_witness = false;
  for (const auto& c : r.checks)
    if (!c.pass && !c.witness.empty()) has_witness = true;
  CHECK(has_witness);
}

TEST_CASE("tensor trace contraction") {
  auto z = RingContext::integers();
  Rng rng(21);
  {
    // identity permutation: product of traces
    std::vector<Matrix> ms = {random_int_matrix(2, z, rng), random_int_matrix(2, z, rng)};
    CHECK(tensor_sigma_trace(ms, Permutation::identity(2)) == ms[0].trace() * ms[1].trace());
    // transposition: trace of the product
    Permutation swap = Permutation::from_cycles(2, {{0, 1}});
    CHECK(tensor_sigma_trace(ms, swap) == (ms[0] * ms[1]).trace());
  }
  {
    // 3-cycle on three random matrices: trace of the ordered product
    std::vector<Matrix> ms = {random_int_matrix(2, z, rng), random_int_matrix(2, z, rng),
                              random_int_matrix(2, z, rng)};
    Permutation cyc = Permutation::from_cycles(3, {{0, 1, 2}});
    CHECK(tensor_sigma_trace(ms, cyc) == (ms[0] * ms[1] * ms[2]).trace());
  }
  {
    std::vector<Matrix> ms = {random_int_matrix(2, z, rng)};
    CHECK_THROWS_WITH_AS(tensor_sigma_trace(ms, Permutation::identity(2)),
                         doctest::Contains("DegreeMismatch"), Error);
  }
}

TEST_CASE("tensor trace agrees with the cycle-product formula") {
  auto z = RingContext::integers();
  for (int n = 1; n <= 4; ++n) {
    for (int d : {2, 3}) {
      Rng rng = Rng::derive(31, n * 10 + d);
      for (int t = 0; t < (n == 4 ? 10 : 50); ++t) {
        std::vector<Matrix> ms;
        for (int k = 0; k < n; ++k) ms.push_back(random_int_matrix(d, z, rng));
        for (const auto& sigma : all_permutations(n))
          CHECK(tensor_sigma_trace(ms, sigma) == t_sigma_matrices(ms, sigma));
      }
    }
  }
}
