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

#include "detlab/pseudochar.hpp"
#include "support.hpp"

using namespace detlab;
using namespace detlab::testsupport;

TEST_CASE("central functions are validated") {
  auto s3 = corpus_group("s3.json");
  auto q = RingContext::rationals();
  // class function: 2 on the identity, 0 on transpositions, -1 on 3-cycles
  auto rep = corpus_rep("rep_s3_std_q.json");
  CHECK_NOTHROW(CentralFunction::from_rep_trace(*rep, 2));
  CHECK_THROWS_WITH_AS(CentralFunction::from_rep_trace(*rep, 3), doctest::Contains("T(1)"),
                       Error);
  // a non-central table of values is rejected
  std::vector<RingElem> values(6, RingElem::zero(q));
  values[0] = RingElem::from_int(q, 2);
  values[1] = RingElem::one(q);  // one transposition singled out
  CHECK_THROWS_WITH_AS(CentralFunction(s3, values, std::nullopt),
                       doctest::Contains("NotCentral"), Error);
}

TEST_CASE("cycle products for fixed permutations") {
  auto rep = corpus_rep("rep_s3_std_q.json");
  CentralFunction T = CentralFunction::from_rep_trace(*rep, 2);
  const FiniteMonoidTable& tbl = *rep->table();
  std::vector<int> g = {1, 2};
  CHECK(t_sigma(T, Permutation::identity(2), g) == T.value(1) * T.value(2));
  CHECK(t_sigma(T, Permutation::from_cycles(2, {{0, 1}}), g) == T.value(tbl.mul(1, 2)));
  CHECK_THROWS_WITH_AS(t_sigma(T, Permutation::identity(3), g),
                       doctest::Contains("DegreeMismatch"), Error);
}

TEST_CASE("cycle products are conjugation invariant") {
  auto rep = corpus_rep("rep_d4_std_q.json");
  CentralFunction T = CentralFunction::from_rep_trace(*rep, 2);
  Rng rng(41);
  for (const auto& sigma : all_permutations(4)) {
    std::vector<int> tuple;
    for (int k = 0; k < 4; ++k) tuple.push_back(static_cast<int>(rng.range(0, 7)));
    for (const auto& pi : all_permutations(4)) {
      // conjugate sigma by pi and permute the tuple accordingly
      Permutation pi_inv = Permutation::identity(4);
      for (int i = 0; i < 4; ++i) pi_inv.map[pi(i)] = i;
      Permutation conj = pi.compose(sigma).compose(pi_inv);
      std::vector<int> permuted(4);
      for (int i = 0; i < 4; ++i) permuted[pi(i)] = tuple[i];
      CHECK(t_sigma(T, conj, permuted) == t_sigma(T, sigma, tuple));
    }
    break;  // one tuple with the full S4 x S4 sweep keeps the runtime sane
  }
}

TEST_CASE("signed identity holds at the right dimension and fails below") {
  {
    // characters: T(g1)T(g2) - T(g1 g2) = 0
    auto z3 = corpus_group("z3.json");
    auto f7 = RingContext::prime_field(7);
    std::vector<RingElem> chi = {RingElem::one(f7), RingElem::from_int(f7, 2),
                                 RingElem::from_int(f7, 4)};
    CentralFunction T(z3, chi, 1);
    CHECK(pseudochar_identity_check(T, 1, std::nullopt).all_pass());
  }
  {
    auto rep = corpus_rep("rep_s3_std_q.json");
    CentralFunction T = CentralFunction::from_rep_trace(*rep, 2);
    CHECK(pseudochar_identity_check(T, 2, std::nullopt).all_pass());
    // same trace one dimension down: must produce a nonzero witness
    Report low = pseudochar_identity_check(T, 1, std::nullopt);
    CHECK_FALSE(low.all_pass());
  }
  {
    // the 3-dimensional permutation trace is not a 2-dim pseudocharacter
    auto rep3 = corpus_rep("rep_s3_perm3_q.json");
    CentralFunction T3 = CentralFunction::from_rep_trace(*rep3, 3);
    CHECK(pseudochar_identity_check(T3, 3, std::nullopt).all_pass());
    CHECK_FALSE(pseudochar_identity_check(T3, 2, std::nullopt).all_pass());
  }
}

TEST_CASE("signed identity across the small-group corpus at true dimensions") {
  for (const char* name : {"rep_z2_reg_q.json", "rep_z3_rot_q.json", "rep_z3_chars_f7.json",
                           "rep_v4_diag_q.json", "rep_d4_std_q.json", "rep_q8_std_f7.json"}) {
    auto rep = corpus_rep(name);
    CentralFunction T = CentralFunction::from_rep_trace(*rep, rep->dim());
    CHECK(pseudochar_identity_check(T, rep->dim(), std::nullopt).all_pass());
    Report below = pseudochar_identity_check(T, rep->dim() - 1, std::nullopt);
    CHECK_FALSE(below.all_pass());
  }
}

TEST_CASE("full polarization diagonals") {
  auto z = RingContext::integers();
  Rng rng(43);
  {
    // d = 2: tr(g)^2 - tr(g^2) = 2 det(g)
    Matrix g = random_int_matrix(2, z, rng);
    RingElem lhs = full_polarization_det_matrices({g, g});
    CHECK(lhs == g.trace() * g.trace() - (g * g).trace());
    CHECK(lhs == RingElem::from_int(z, 2) * det(g));
  }
  {
    // d = 3: diagonal evaluation gives 6 det(g), against the cofactor oracle
    Matrix g = random_int_matrix(3, z, rng);
    CHECK(full_polarization_det_matrices({g, g, g}) ==
          RingElem::from_int(z, 6) * cofactor_det(g));
  }
  {
    // d = 1 is the trace itself
    Matrix g = random_int_matrix(1, z, rng);
    CHECK(full_polarization_det_matrices({g}) == g.trace());
  }
}

TEST_CASE("partial polarization diagonals") {
  auto z = RingContext::integers();
  Rng rng(47);
  {
    // d = 1: T(g)T(h) - T(gh)
    Matrix g = random_int_matrix(1, z, rng), h = random_int_matrix(1, z, rng);
    CHECK(partial_polarization_phi_matrices({g}, {h}) ==
          g.trace() * h.trace() - (g * h).trace());
    CHECK(partial_polarization_phi_matrices({g}, {h}) ==
          det(g) * det(h) - det(g * h));
  }
  for (int d : {2, 3}) {
    RingElem factor = RingElem::from_int(z, d == 2 ? 4 : 36);  // (d!)^2
    Rng local = Rng::derive(47, d);
    for (int t = 0; t < 100; ++t) {
      Matrix g = random_int_matrix(d, z, local, -4, 4);
      Matrix h = random_int_matrix(d, z, local, -4, 4);
      RingElem lhs = partial_polarization_phi_matrices(std::vector<Matrix>(d, g),
                                                       std::vector<Matrix>(d, h));
      RingElem rhs = factor * (cofactor_det(g) * cofactor_det(h) - cofactor_det(g * h));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("newton recursion from power traces") {
  auto q = RingContext::rationals();
  {
    // d = 1: Lambda_1 = T(r)
    std::vector<RingElem> tr = {RingElem::from_rat(q, Rat(5))};
    auto l = lambdas_from_traces(tr, 1);
    CHECK(l[0] == tr[0]);
  }
  {
    // d = 2: Lambda_2 = (T(r)^2 - T(r^2)) / 2
    Rng rng(53);
    Matrix r = random_int_matrix(2, q, rng);
    std::vector<RingElem> tr = {r.trace(), (r * r).trace()};
    auto l = lambdas_from_traces(tr, 2);
    CHECK(l[1] == RingElem::from_rat(q, Rat(1, 2)) * (tr[0] * tr[0] - tr[1]));
    CHECK(l[1] == det(r));
  }
  for (int d = 3; d <= 4; ++d) {
    Rng rng = Rng::derive(59, d);
    Matrix r = random_int_matrix(d, q, rng);
    std::vector<RingElem> tr;
    Matrix p = Matrix::identity(d, q);
    for (int j = 1; j <= d; ++j) {
      p = p * r;
      tr.push_back(p.trace());
    }
    auto l = lambdas_from_traces(tr, d);
    auto chi = berkowitz_charpoly(r);
    for (int i = 1; i <= d; ++i) {
      RingElem expected = i % 2 == 0 ? chi[i] : chi[i].neg();
      CHECK(l[i - 1] == expected);
    }
  }
  {
    // power traces over F5 with p > d
    auto f5 = RingContext::prime_field(5);
    Rng rng(61);
    Matrix r = random_int_matrix(3, f5, rng, 0, 4);
    std::vector<RingElem> tr = {r.trace(), (r * r).trace(), (r * r * r).trace()};
    auto l = lambdas_from_traces(tr, 3);
    CHECK(l[2] == det(r));
  }
  {
    // the factorial guard fires in small characteristic
    auto f2 = RingContext::prime_field(2);
    std::vector<RingElem> tr = {RingElem::zero(f2), RingElem::zero(f2)};
    CHECK_THROWS_WITH_AS(lambdas_from_traces(tr, 2),
                         doctest::Contains("FactorialNotInvertible"), Error);
  }
  {
    // P(tr(1), tr(1), ...) = det(1) = 1 at every dimension
    for (int d = 1; d <= 4; ++d) {
      std::vector<RingElem> tr(d, RingElem::from_rat(q, Rat(d)));
      auto l = lambdas_from_traces(tr, d);
      CHECK(l[d - 1] == RingElem::one(q));
    }
  }
}

TEST_CASE("trace generating series on corpus laws") {
  for (const char* name : {"rep_s3_std_q.json", "rep_z4_rot_q.json"}) {
    auto rep = corpus_rep(name);
    DeterminantLaw law = DeterminantLaw::matrix_det(rep);
    for (int g = 0; g < rep->table()->size(); ++g) {
      AlgebraElem r = delta(*rep->table(), g, rep->context());
      CHECK(newton_check(law, r, 8).all_pass());
    }
  }
  // d = 3 on a random sum of group elements
  auto rep3 = corpus_rep("rep_s3_perm3_q.json");
  DeterminantLaw law3 = DeterminantLaw::matrix_det(rep3);
  AlgebraElem r = delta(*rep3->table(), 1, rep3->context()) +
                  delta(*rep3->table(), 2, rep3->context()).scaled(
                      RingElem::from_rat(rep3->context(), Rat(3)));
  CHECK(newton_check(law3, r, 8).all_pass());
}
