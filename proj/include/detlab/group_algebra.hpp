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

#ifndef DETLAB_GROUP_ALGEBRA_HPP
#define DETLAB_GROUP_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detlab/rings.hpp"
#include "detlab/util.hpp"

namespace detlab {

/// A finite monoid given by its full multiplication table.  Construction
/// validates the identity axiom and full associativity, naming the failing
/// triple on error.
class FiniteMonoidTable {
 public:
  FiniteMonoidTable(std::vector<std::vector<int>> table, int identity,
                    std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[x][y]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Inverse list when every element has a two-sided inverse (i.e. the monoid
  /// is a group); empty otherwise.
  const std::optional<std::vector<int>>& inverses() const { return inverses_; }
  bool is_group() const { return inverses_.has_value(); }
  int inverse(int x) const;  // NoInverses when not a group

  int product_of_word(const std::vector<int>& word) const;  // identity for the empty word

 private:
  std::vector<std::vector<int>> table_;
  int identity_;
  std::vector<std::string> labels_;
  std::optional<std::vector<int>> inverses_;
};

using MonoidPtr = std::shared_ptr<const FiniteMonoidTable>;

/// Closure of a permutation generating set under composition, breadth-first
/// over generator words with generators in input order; the identity is
/// element 0.  ClosureTooLarge beyond `cap` elements.
struct PermutationClosure {
  MonoidPtr table;
  std::vector<Permutation> elements;
  /// parent[i] = (previous element, generator) with elements[i] =
  /// elements[prev] ∘ gen; (-1,-1) for the identity.
  std::vector<std::pair<int, int>> parents;
};
PermutationClosure monoid_from_permutations(const std::vector<std::vector<int>>& generators,
                                            int cap = 5040);

/// Sparse element of the monoid algebra: index -> coefficient, no explicit
/// zeros, all coefficients in one context.
class AlgebraElem {
 public:
  AlgebraElem(RingContextPtr ctx, std::map<int, RingElem> terms = {});

  const RingContextPtr& context() const { return ctx_; }
  const std::map<int, RingElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RingElem coeff(int g) const;
  AlgebraElem operator+(const AlgebraElem& rhs) const;
  AlgebraElem operator-(const AlgebraElem& rhs) const;
  AlgebraElem neg() const;
  AlgebraElem scaled(const RingElem& c) const;
  bool operator==(const AlgebraElem& rhs) const;

  std::string str(const FiniteMonoidTable& table) const;

 private:
  RingContextPtr ctx_;
  std::map<int, RingElem> terms_;
};

/// delta_g over the given context.
AlgebraElem delta(const FiniteMonoidTable& table, int g, const RingContextPtr& ctx);

/// Convolution product: (ab)[z] = sum over xy = z of a[x] b[y].
AlgebraElem algebra_mul(const AlgebraElem& a, const AlgebraElem& b, const FiniteMonoidTable& table);

AlgebraElem algebra_pow(const AlgebraElem& a, unsigned e, const FiniteMonoidTable& table);

/// Sum of coefficients; a ring homomorphism to the coefficient ring.
RingElem augmentation(const AlgebraElem& a);

/// Lifts an element into an extension context coefficient-wise.
AlgebraElem embed_elem(const AlgebraElem& a, const RingContextPtr& target);

/// sum_i t_i * delta_{g_i} with fresh variables adjoined to `base`.
/// Repeated indices merge coefficients.
struct GenericElement {
  AlgebraElem elem;
  RingContextPtr ctx;
  std::vector<int> var_indices;
};
GenericElement generic_element(const std::vector<int>& elements, const FiniteMonoidTable& table,
                               const RingContextPtr& base, const std::string& prefix = "t");

}  // namespace detlab

#endif  // DETLAB_GROUP_ALGEBRA_HPP
