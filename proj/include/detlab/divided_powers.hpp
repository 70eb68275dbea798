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

#ifndef DETLAB_DIVIDED_POWERS_HPP
#define DETLAB_DIVIDED_POWERS_HPP

#include <map>
#include <string>
#include <vector>

#include "detlab/algebra.hpp"
#include "detlab/laws.hpp"
#include "detlab/report.hpp"

namespace detlab {

/// Degree-d symmetric-tensor algebra of a finite-dimensional algebra: the
/// S_d-invariants of the d-fold tensor power on the orbit-sum basis indexed
/// by multisets (nondecreasing index tuples).  Orbit sums multiply to integer
/// combinations of orbit sums, no division involved.
struct SymTensorAlgebra {
  FinDimAlgebra algebra;                       // structure constants on orbit sums
  int degree;                                  // d
  int base_dim;                                // m
  std::vector<std::vector<int>> multisets;     // basis index -> sorted tuple
  std::map<std::vector<int>, int> index;       // sorted tuple -> basis index
};

/// Builds TS^d; the tensor expansion walks m^d entries (TooLarge beyond cap).
SymTensorAlgebra ts_build(const FinDimAlgebra& base, int d, std::uint64_t cap = 1'000'000);

/// Class of g^(x)d on the orbit basis, for g over the base context or any
/// polynomial/dual extension; the induced map is the universal degree-d law.
AlgVec gamma_universal_image(const AlgVec& g, const SymTensorAlgebra& ts);

/// Quotient by the two-sided ideal generated by basis commutators, over a
/// field: quotient structure constants plus the projection.
struct FieldAbelianization {
  FinDimAlgebra quotient;
  Subspace commutator_ideal;
  /// projection: coordinates of every original basis element in the quotient.
  std::vector<AlgVec> projection;
};
FieldAbelianization abelianize_over_field(const FinDimAlgebra& algebra);

/// Integer abelianization data: the commutator ideal as a sublattice of Z^n,
/// its elementary divisors, and (for a free quotient) structure constants.
struct ZAbelianization {
  std::vector<Int> elementary_divisors;  // nonzero divisors of the ideal lattice
  int free_rank;                         // n - (number of divisors)
  bool quotient_is_free;                 // all divisors are 1 (or ideal is 0)
  IntMat ideal_basis;                    // row basis of the ideal lattice
};
ZAbelianization abelianize_over_z(const FinDimAlgebra& algebra);

/// Dimension of the module quotient R/[R,R] (commutator span, not the
/// two-sided ideal).  For a simple algebra the ideal quotient vanishes while
/// this trace-style quotient survives; both views are useful.
int commutator_coinvariants_dim(const FinDimAlgebra& algebra);

/// Presentation report for the universal ring of degree-d laws on a finite
/// monoid: builds TS^d(base[G]), abelianizes, expresses the Lambda_i(g)
/// generators, and lists the relations found by a bounded-degree scan
/// (evaluation-based, degree <= relation_degree_cap, never a completeness
/// claim).
struct UniversalRingResult {
  int ts_dim = 0;
  std::vector<Int> elementary_divisors;
  int free_rank = 0;
  std::vector<std::string> generator_names;
  std::vector<std::string> relations;
  Report report;
};
UniversalRingResult universal_det_ring(const MonoidPtr& table, int d, const RingContextPtr& base,
                                       int relation_degree_cap = 4, std::size_t basis_cap = 300);

/// Lambda_i(delta_g) inside TS^d(base[G]): the orbit class of
/// 1^(x)(d-i) (x) g^(x)i.
AlgVec universal_lambda_of_element(const SymTensorAlgebra& ts, const FiniteMonoidTable& table,
                                   int g, int i);

/// Checks the graded product decomposition for diagonal algebras:
/// TS^d(A^{m1+m2}) decomposes along TS^i(A^{m1}) (x) TS^{d-i}(A^{m2}),
/// dimension identity plus multiplicativity of the basis bijection on all
/// orbit pairs.
Report product_decomposition_check(int d, int m1, int m2, const RingContextPtr& base);

/// Companion-matrix model of degree-d laws on a polynomial algebra in one
/// variable: charpoly(C) is the generic polynomial, Lambda_i(X) are the
/// elementary coefficients, multiplicative on generic linear substitutions.
Report symmetric_poly_model(int d);

/// A degree-d law obtained by specializing the universal law at a ring
/// point: values on the orbit basis of TS^d(base[G]) composed with a linear
/// functional that must be multiplicative on the quotient (validated on
/// construction against the structure constants).
DeterminantLaw gamma_point_law(std::shared_ptr<const SymTensorAlgebra> ts, MonoidPtr table,
                               const RingContextPtr& value_ctx, std::vector<RingElem> point);

}  // namespace detlab

#endif  // DETLAB_DIVIDED_POWERS_HPP
