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

#ifndef DETLAB_LAWS_HPP
#define DETLAB_LAWS_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "detlab/matrix.hpp"
#include "detlab/report.hpp"

namespace detlab {

/// Backend of a multiplicative homogeneous law on a monoid algebra.  Every
/// provider answers D(x) for x over any polynomial/dual extension of the base
/// context; the characteristic coefficients Lambda_i default to coefficient
/// extraction from D(t - x).
class LawImpl {
 public:
  virtual ~LawImpl() = default;
  virtual int dim() const = 0;
  virtual RingContextPtr base_context() const = 0;
  virtual MonoidPtr table() const = 0;
  virtual RingElem eval(const AlgebraElem& x) const = 0;
  virtual RingElem lambda(const AlgebraElem& x, int i) const;
  virtual std::string describe() const = 0;
};

/// Value-semantic handle for a degree-d multiplicative law D on a monoid
/// algebra, with Lambda-coefficient access.
class DeterminantLaw {
 public:
  DeterminantLaw() = default;
  explicit DeterminantLaw(std::shared_ptr<const LawImpl> impl) : impl_(std::move(impl)) {}

  int dim() const { return impl_->dim(); }
  RingContextPtr base_context() const { return impl_->base_context(); }
  MonoidPtr table() const { return impl_->table(); }
  std::string describe() const { return impl_->describe(); }

  /// D(x); x must live over the base context or a polynomial/dual extension.
  RingElem eval(const AlgebraElem& x) const { return impl_->eval(x); }
  /// Lambda_i(x), same context as x.  Lambda_0 = 1, zero beyond dim.
  RingElem lambda(const AlgebraElem& x, int i) const { return impl_->lambda(x, i); }
  RingElem lambda_element(int g, int i) const;
  /// Coefficients of D(t - delta_g), leading first.
  std::vector<RingElem> charpoly_element(int g) const;

  /// det of a matrix representation.
  static DeterminantLaw matrix_det(std::shared_ptr<const MatrixRep> rep);
  /// Dimension-1 law: a character with unit values.
  static DeterminantLaw character(MonoidPtr table, std::vector<RingElem> values);
  /// m-th power of a law (dimension m * inner dimension).
  static DeterminantLaw power(DeterminantLaw inner, int m);
  static DeterminantLaw from_impl(std::shared_ptr<const LawImpl> impl) {
    return DeterminantLaw(std::move(impl));
  }

  bool valid() const { return impl_ != nullptr; }

 private:
  std::shared_ptr<const LawImpl> impl_;
};

/// Symbolic checks that the defining identities hold: multiplicativity
/// D(xy) = D(x)D(y) and the swap rule D(1+rr') = D(1+r'r), evaluated on
/// generic elements with fresh variables.  For big instances the generic
/// elements are sampled over a prime field with p > 2*dim! instead.  Any
/// violating monomial lands in the report witness.
Report law_identity_fuzz(const DeterminantLaw& law, const std::set<std::string>& checks,
                         int trials, std::uint64_t seed);

/// Sanity sweep used by tests and the CLI: Lambda_0 = 1, Lambda_i = 0 beyond
/// dim, D(1) = 1, and homogeneity D(b x) = b^dim D(x) in a fresh variable.
Report validate_law(const DeterminantLaw& law);

}  // namespace detlab

#endif  // DETLAB_LAWS_HPP
