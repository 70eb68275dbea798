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

#ifndef DETLAB_CH_KERNEL_HPP
#define DETLAB_CH_KERNEL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "detlab/algebra.hpp"
#include "detlab/laws.hpp"
#include "detlab/report.hpp"

namespace detlab {

/// A degree-d law evaluable on the elements of a finite-dimensional algebra:
/// lambda(v, i) with v a coordinate vector over the base context or any
/// polynomial/dual extension of it.
struct AlgebraLaw {
  const FinDimAlgebra* algebra;
  int d;
  std::function<RingElem(const AlgVec&, int)> lambda;
};

/// Law through a matrix model: basis element i acts as `basis_matrices[i]`,
/// lambda through the division-free characteristic polynomial.
AlgebraLaw algebra_law_from_matrices(const FinDimAlgebra& algebra,
                                     std::vector<Matrix> basis_matrices, int d);

/// Law on a monoid algebra through any DeterminantLaw provider.
AlgebraLaw algebra_law_from_det_law(const FinDimAlgebra& algebra, DeterminantLaw law);

/// The degree-d Cayley–Hamilton value
///   chi(r) = r^d - L1(r) r^{d-1} + ... + (-1)^d Ld(r) * 1.
AlgVec chi_eval(const AlgebraLaw& law, const AlgVec& r);

/// Coefficient of t^alpha in chi(t_1 r_1 + ... + t_n r_n); |alpha| must be d
/// (DegreeMismatch).
AlgVec chi_alpha(const AlgebraLaw& law, const std::vector<AlgVec>& elements,
                 const std::vector<int>& alpha);

/// Two-sided ideal generated by the chi_alpha values on basis tuples of size
/// n <= d (all |alpha| = d), closed under basis multiplication.  Field base
/// only (NotAField).
Subspace ch_ideal(const AlgebraLaw& law, int max_tuple = -1);

/// Jacobson radical via the kernel of the regular trace form (x,y) ->
/// tr(L_{xy}); valid for characteristic 0 or p > dim (CharacteristicTooSmall),
/// field base only.  The result is asserted nilpotent.
Subspace radical(const FinDimAlgebra& algebra);

/// The image rho(k[G]) of a representation as a finite-dimensional algebra
/// with its embedding data.
struct ImageAlgebra {
  FinDimAlgebra algebra;               // structure constants on an image basis
  std::vector<Matrix> basis_matrices;  // the chosen basis, as matrices
  /// rho expressed on delta_g: coordinates of each image in the basis.
  std::vector<AlgVec> element_coords;
};
ImageAlgebra image_algebra(const MatrixRep& rep);

/// ker(D) for D = det o rho on k[G]: the preimage of the radical of the
/// image algebra.  Certified a posteriori: every spanning element x
/// satisfies Lambda_i(x*y) = 0 identically for generic y.
Subspace kernel_of_det(const MatrixRep& rep);

/// Burnside-style dimension of the unital algebra generated by matrices.
int subalgebra_span(const std::vector<Matrix>& generators);

/// Searches for d^2 elements of the monoid with invertible trace Gram matrix
/// (Lambda_1(x_i x_j)); greedy rank extension with seeded random restarts.
struct GramCertificate {
  bool found = false;
  std::vector<int> elements;  // certificate tuple (monoid element indices)
  int best_rank = 0;
};
GramCertificate gram_irreducibility(const DeterminantLaw& law, int restarts = 50,
                                    std::uint64_t seed = 1);

}  // namespace detlab

#endif  // DETLAB_CH_KERNEL_HPP
