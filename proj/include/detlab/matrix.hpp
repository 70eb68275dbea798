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

#ifndef DETLAB_MATRIX_HPP
#define DETLAB_MATRIX_HPP

#include <memory>
#include <vector>

#include "detlab/group_algebra.hpp"
#include "detlab/rings.hpp"
#include "detlab/util.hpp"

namespace detlab {

/// Dense matrix of exact ring elements sharing one context.
class Matrix {
 public:
  Matrix(int rows, int cols, const RingContextPtr& ctx);
  static Matrix identity(int n, const RingContextPtr& ctx);
  static Matrix from_rows(const RingContextPtr& ctx, std::vector<std::vector<RingElem>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RingContextPtr& context() const { return ctx_; }

  const RingElem& at(int i, int j) const { return data_[i * cols_ + j]; }
  void set(int i, int j, RingElem v);

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix scaled(const RingElem& c) const;
  RingElem trace() const;
  bool operator==(const Matrix& rhs) const;
  Matrix pow(unsigned e) const;
  std::string str() const;

 private:
  int rows_, cols_;
  RingContextPtr ctx_;
  std::vector<RingElem> data_;
};

Matrix embed_matrix(const Matrix& m, const RingContextPtr& target);

/// Division-free characteristic polynomial (Samuelson–Berkowitz), valid over
/// any commutative ring.  Returns the d+1 coefficients of det(tI - M) from
/// the leading one: [1, -L1, +L2, ..., (-1)^d Ld].  NonSquare otherwise.
std::vector<RingElem> berkowitz_charpoly(const Matrix& m);

/// Determinant through the Berkowitz constant term.
RingElem det(const Matrix& m);

/// i-th characteristic coefficient of m: Lambda_0 = 1, Lambda_1 = trace,
/// Lambda_d = det, zero beyond d.
RingElem matrix_lambda(const Matrix& m, int i);

/// Trace of (M_1 (x) ... (x) M_n) composed with the factor permutation sigma
/// on the n-fold tensor power, computed by d^n diagonal walks without
/// materializing the big matrix.  For sigma a single cycle this equals the
/// trace of the product along the cycle.
RingElem tensor_sigma_trace(const std::vector<Matrix>& matrices, const Permutation& sigma);

/// Matrix representation of a finite monoid; construction checks the identity
/// image and the full homomorphism property.
class MatrixRep {
 public:
  MatrixRep(int d, MonoidPtr table, std::vector<Matrix> images);

  int dim() const { return d_; }
  const MonoidPtr& table() const { return table_; }
  const RingContextPtr& context() const { return ctx_; }
  const Matrix& image(int g) const { return images_[g]; }
  const std::vector<Matrix>& images() const { return images_; }

  /// Image of an algebra element over any extension of the rep's context.
  Matrix image_of(const AlgebraElem& x) const;

  /// Propagates generator images along a permutation closure (breadth-first
  /// word order), then validates.
  static std::shared_ptr<MatrixRep> from_generators(const PermutationClosure& closure,
                                                    const std::vector<Matrix>& generator_images);

 private:
  int d_;
  MonoidPtr table_;
  RingContextPtr ctx_;
  std::vector<Matrix> images_;
};

}  // namespace detlab

#endif  // DETLAB_MATRIX_HPP
