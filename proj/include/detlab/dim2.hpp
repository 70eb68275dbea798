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

#ifndef DETLAB_DIM2_HPP
#define DETLAB_DIM2_HPP

#include <vector>

#include "detlab/laws.hpp"
#include "detlab/pseudochar.hpp"
#include "detlab/report.hpp"

namespace detlab {

/// A dimension-2 law on a group presented by its value pair (T, D):
/// T central with T(1) = 2, D a homomorphism into units.  The bilinear form
/// is derived as f(g,h) = T(g)T(h) - T(gh).
struct Dim2Law {
  MonoidPtr table;
  RingContextPtr ctx;
  std::vector<RingElem> T;
  std::vector<RingElem> D;

  RingElem f(int g, int h) const { return T[g] * T[h] - T[table->mul(g, h)]; }
};

/// Exhaustive axiom verification: T(1)=2, D a homomorphism into units,
/// centrality (a), the inverse-form relation (b)
///   D(g) T(g^-1 h) - T(g) T(h) + T(gh) = 0,
/// and independently the f-form conditions: f(g,g) = 2 D(g), f symmetric,
/// f(hg,h'g) = f(h,h') D(g), f(hg,h'g') + f(hg',h'g) = f(h,h') f(g,g').
/// Requires inverses (NoInverses).  Each axiom reports pass/fail + witness.
Report verify_dim2_axioms(const Dim2Law& law);

/// Quadratic-law evaluation D(sum t_i g_i) = sum D(g_i) t_i^2 +
/// sum_{i<j} f(g_i,g_j) t_i t_j, over any polynomial/dual extension of ctx.
RingElem dim2_eval(const Dim2Law& law, const AlgebraElem& x);

/// Wraps a Dim2Law as a DeterminantLaw provider.
DeterminantLaw dim2_determinant(const Dim2Law& law);

/// (T, D) = (trace, det) of a 2-dimensional matrix representation.
Dim2Law dim2_from_rep(const MatrixRep& rep);

/// Builds D(g) = (T(g)^2 - T(g^2)) / 2 from a central T with T(1) = 2
/// satisfying the signed 2-dimensional identity.  TwoNotInvertible /
/// PseudocharIdentityFails on violated preconditions; the resulting law is
/// run through verify_dim2_axioms and an axiom failure is an error.
Dim2Law dim2_from_pseudochar(const CentralFunction& T);

/// One tangent vector at the trivial law over a base with 2 = 0: the value
/// tables of (tau, delta) with T = 2 + eps*tau, D = 1 + eps*delta.
struct Deformation {
  std::vector<RingElem> tau;
  std::vector<RingElem> delta;
};

/// Exhaustively enumerates all (tau, delta) : G -> A with tau(1) = 0 over a
/// base with 2 = 0 (CharacteristicNotTwo otherwise), keeps exactly those
/// whose dual-number law passes every axiom, and cross-checks the retained
/// set against the parametrization {both factor through G/G^2, delta
/// additive}.  EnumerationTooLarge beyond the cap.
struct DeformationEnumeration {
  std::vector<Deformation> deformations;
  bool parametrization_matches;
  int expected_from_parametrization;
};
DeformationEnumeration deformation_space_enumerate(const MonoidPtr& table,
                                                   const RingContextPtr& base,
                                                   std::uint64_t cap = 1'000'000);

/// Builds the dual-number law of a deformation of the trivial law.
Dim2Law deformation_law(const MonoidPtr& table, const RingContextPtr& base, const Deformation& d);

/// For I = ker of the trivial law (the augmentation ideal), verifies that
/// every product of 4 = 2*dim spanning elements of I lies in the kernel of
/// the deformed law: D(1 + t*x*y) = 1 identically for y generic.
Report factor_ideal_probe(const MonoidPtr& table, const RingContextPtr& base,
                          const Deformation& d);

/// Odd-locus coordinates for a trace-zero involution c (det(c) = -1;
/// PreconditionViolated otherwise, unless expect_det_plus_one relaxes the
/// check to det(c) = +1 to probe the other convention):
///   x = tr(g) - 2, y = tr(cg) - 2, z = det(g) - 1,
///   residual = x^2 - y^2 - 4(1 - x + y + z),
///   gram_det = det(tr(x_i x_j)) on (1, c, g, cg).
struct OddLocusResult {
  RingElem residual;
  RingElem gram_det;
};
OddLocusResult odd_reducibility_relation(const Matrix& c, const Matrix& g,
                                         bool expect_det_plus_one = false);

/// One-time symbolic determination of the constant kappa with
/// gram_det = kappa * residual^2 (the two invariants vanish together; their
/// degrees force the quadratic relation).  Computed over Q(a,b,c,d) with
/// c = diag(1,-1) and a generic g.
Rat odd_locus_kappa();

}  // namespace detlab

#endif  // DETLAB_DIM2_HPP
