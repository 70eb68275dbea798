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

#ifndef DETLAB_ALGEBRA_HPP
#define DETLAB_ALGEBRA_HPP

#include <string>
#include <vector>

#include "detlab/group_algebra.hpp"
#include "detlab/matrix.hpp"
#include "detlab/rings.hpp"

namespace detlab {

/// Coordinate vector of an algebra element with respect to the basis.
using AlgVec = std::vector<RingElem>;

/// Associative unital algebra of finite dimension given by structure
/// constants; associativity and the unit axiom are checked on construction.
class FinDimAlgebra {
 public:
  FinDimAlgebra(RingContextPtr ctx, std::vector<std::vector<AlgVec>> structure, AlgVec unit,
                std::vector<std::string> labels = {}, bool check = true);

  const RingContextPtr& context() const { return ctx_; }
  int dim() const { return dim_; }
  const std::string& label(int i) const { return labels_[i]; }
  const AlgVec& unit() const { return unit_; }
  const AlgVec& basis_product(int i, int j) const { return structure_[i][j]; }

  AlgVec zero(const RingContextPtr& ctx) const;
  AlgVec one(const RingContextPtr& ctx) const;
  AlgVec basis_vec(int i, const RingContextPtr& ctx) const;
  /// Product of coordinate vectors over any extension of the base context.
  AlgVec mul(const AlgVec& a, const AlgVec& b) const;
  AlgVec add(const AlgVec& a, const AlgVec& b) const;
  AlgVec sub(const AlgVec& a, const AlgVec& b) const;
  AlgVec scale(const AlgVec& a, const RingElem& c) const;
  AlgVec power(const AlgVec& a, unsigned e) const;
  bool is_zero_vec(const AlgVec& a) const;
  bool vec_eq(const AlgVec& a, const AlgVec& b) const;
  std::string vec_str(const AlgVec& a) const;

  /// Matrix of left multiplication by a on the regular representation.
  Matrix left_multiplication(const AlgVec& a) const;

 private:
  RingContextPtr ctx_;
  int dim_;
  std::vector<std::vector<AlgVec>> structure_;
  AlgVec unit_;
  std::vector<std::string> labels_;
};

FinDimAlgebra group_algebra_findim(const MonoidPtr& table, const RingContextPtr& ctx);
FinDimAlgebra full_matrix_algebra(int n, const RingContextPtr& ctx);
FinDimAlgebra upper_triangular_algebra(int n, const RingContextPtr& ctx);

/// Basis matrices of the model behind full_matrix_algebra /
/// upper_triangular_algebra, in basis order.
std::vector<Matrix> matrix_algebra_basis(int n, const RingContextPtr& ctx);
std::vector<Matrix> upper_triangular_basis(int n, const RingContextPtr& ctx);

AlgVec algebra_elem_to_vec(const AlgebraElem& x, int dim);
AlgebraElem vec_to_algebra_elem(const AlgVec& v, const RingContextPtr& ctx);

/// Row-echelon subspace of k^n over a field context (NotAField otherwise).
class Subspace {
 public:
  Subspace(RingContextPtr ctx, int ambient_dim);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<RingElem>>& basis() const { return rows_; }
  const RingContextPtr& context() const { return ctx_; }

  /// Reduces v against the basis; returns the residue.
  std::vector<RingElem> reduce(std::vector<RingElem> v) const;
  bool contains(const std::vector<RingElem>& v) const;
  bool contains_subspace(const Subspace& other) const;
  bool same_subspace(const Subspace& other) const;
  /// Inserts v if independent; returns true when the dimension grew.
  bool insert(std::vector<RingElem> v);

 private:
  RingContextPtr ctx_;
  int n_;
  std::vector<std::vector<RingElem>> rows_;   // echelon, unit pivots
  std::vector<int> pivots_;
};

/// Rank of a matrix given as rows, over a field context.
int row_rank(const RingContextPtr& ctx, std::vector<std::vector<RingElem>> rows);

/// Nullspace basis of the linear map x -> rows * x (kernel as column
/// vectors), over a field context.
std::vector<std::vector<RingElem>> nullspace(const RingContextPtr& ctx,
                                             const std::vector<std::vector<RingElem>>& rows);

/// Solves rows^T coefficients: expresses `target` in the span of `vectors`
/// (as columns); empty optional when inconsistent.
std::optional<std::vector<RingElem>> solve_in_span(const RingContextPtr& ctx,
                                                   const std::vector<std::vector<RingElem>>& vectors,
                                                   const std::vector<RingElem>& target);

// ---- integer lattices ---------------------------------------------------

using IntMat = std::vector<std::vector<Int>>;

/// Hermite-style reduction of the row lattice; returns an independent row
/// basis (not necessarily reduced off-pivot).
IntMat lattice_row_basis(IntMat rows);

/// Smith normal form U*M*V = D.  Only D's diagonal and the column transform
/// (with inverse) are returned; the diagonal entries are the elementary
/// divisors d_1 | d_2 | ...
struct SmithResult {
  std::vector<Int> divisors;  // nonzero diagonal entries
  IntMat V;                   // column transform, n x n unimodular
  IntMat V_inv;
  int rows, cols;
};
SmithResult smith_normal_form(IntMat m);

}  // namespace detlab

#endif  // DETLAB_ALGEBRA_HPP
