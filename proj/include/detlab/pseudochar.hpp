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

#ifndef DETLAB_PSEUDOCHAR_HPP
#define DETLAB_PSEUDOCHAR_HPP

#include <optional>
#include <vector>

#include "detlab/laws.hpp"
#include "detlab/report.hpp"
#include "detlab/util.hpp"

namespace detlab {

/// A central function T : G -> A, i.e. T(gh) = T(hg) for all pairs (checked
/// on construction).  When a dimension hint is given, T(1) = d is enforced.
class CentralFunction {
 public:
  CentralFunction(MonoidPtr table, std::vector<RingElem> values,
                  std::optional<int> dim_hint = std::nullopt);

  static CentralFunction from_rep_trace(const MatrixRep& rep, std::optional<int> dim_hint);

  const MonoidPtr& table() const { return table_; }
  const RingContextPtr& context() const { return ctx_; }
  const RingElem& value(int g) const { return values_[g]; }
  std::optional<int> dim_hint() const { return dim_hint_; }

 private:
  MonoidPtr table_;
  RingContextPtr ctx_;
  std::vector<RingElem> values_;
  std::optional<int> dim_hint_;
};

/// T^sigma on a tuple of monoid elements: the product over cycles of T of the
/// cycle product, each cycle traversed from its minimal moved index.
RingElem t_sigma(const CentralFunction& T, const Permutation& sigma, const std::vector<int>& g);

/// Same cycle formula with T = trace and matrix products.
RingElem t_sigma_matrices(const std::vector<Matrix>& g, const Permutation& sigma);

/// Signed sum over S_{d+1}: sum of eps(sigma) T^sigma(g_1..g_{d+1}).
RingElem pseudochar_sum(const CentralFunction& T, int d, const std::vector<int>& tuple);

/// Evaluates the signed degree-(d+1) identity on the given tuples, or on all
/// |G|^{d+1} tuples when none are given (cap-guarded).  Failures carry the
/// offending tuple.
Report pseudochar_identity_check(const CentralFunction& T, int d,
                                 const std::optional<std::vector<std::vector<int>>>& tuples,
                                 std::uint64_t exhaustive_cap = 100000);

/// Full polarization sum over S_d of eps(sigma) T^sigma on a d-tuple; on the
/// diagonal this is d! times the determinant when T is a d-dim matrix trace.
RingElem full_polarization_det(const CentralFunction& T, const std::vector<int>& g);
RingElem full_polarization_det_matrices(const std::vector<Matrix>& g);

/// (d,d)-partial polarization: sum over H = <S_d x S_d, tau> in S_{2d} of
/// s(sigma) T^sigma on (g_1..g_d,h_1..h_d), where tau swaps the blocks,
/// s restricts to the signature on S_d x S_d and s(tau) = -1.
RingElem partial_polarization_phi(const CentralFunction& T, const std::vector<int>& g,
                                  const std::vector<int>& h);
RingElem partial_polarization_phi_matrices(const std::vector<Matrix>& g,
                                           const std::vector<Matrix>& h);

/// Newton recursion Lambda_i = (1/i) sum_{j=1}^{i} (-1)^{j-1} Lambda_{i-j} T(r^j),
/// from power traces [T(r), ..., T(r^d)]; every i <= d must be a unit
/// (FactorialNotInvertible otherwise).  Returns [Lambda_1..Lambda_d].
std::vector<RingElem> lambdas_from_traces(const std::vector<RingElem>& powertraces, int d);

/// Verifies -t d/dt D(1 - t r) / D(1 - t r) = sum_{n>=1} Lambda_1(r^n) t^n
/// exactly to order N.
Report newton_check(const DeterminantLaw& law, const AlgebraElem& r, int order);

}  // namespace detlab

#endif  // DETLAB_PSEUDOCHAR_HPP
