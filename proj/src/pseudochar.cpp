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

#include "detlab/pseudochar.hpp"

#include <sstream>

#include "detlab/group_algebra.hpp"

namespace detlab {

CentralFunction::CentralFunction(MonoidPtr table, std::vector<RingElem> values,
                                 std::optional<int> dim_hint)
    : table_(std::move(table)), values_(std::move(values)), dim_hint_(dim_hint) {
  if (static_cast<int>(values_.size()) != table_->size())
    fail("InvalidInput", "value count differs from monoid size");
  ctx_ = values_[0].context();
  for (const auto& v : values_)
    if (!same_context(v.context(), ctx_)) fail("ContextMismatch", "values over different contexts");
  int m = table_->size();
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      if (!(values_[table_->mul(g, h)] == values_[table_->mul(h, g)]))
        fail("NotCentral", "T(gh) != T(hg) at (" + std::to_string(g) + "," + std::to_string(h) + ")");
  if (dim_hint_ && !(values_[table_->identity()] == RingElem::from_int(ctx_, *dim_hint_)))
    fail("InvalidInput", "T(1) differs from the dimension hint");
}

CentralFunction CentralFunction::from_rep_trace(const MatrixRep& rep, std::optional<int> dim_hint) {
  std::vector<RingElem> values;
  values.reserve(rep.table()->size());
  for (int g = 0; g < rep.table()->size(); ++g) values.push_back(rep.image(g).trace());
  return CentralFunction(rep.table(), std::move(values), dim_hint);
}

namespace {

/// Shared cycle-product evaluation: Times multiplies tuple entries, Value
/// extracts T of the product.
template <class Elem, class Mul, class Tval>
RingElem t_sigma_generic(const Permutation& sigma, const std::vector<Elem>& tuple, Mul mul,
                         Tval tval, const RingElem& unit) {
  if (sigma.degree() != static_cast<int>(tuple.size()))
    fail("DegreeMismatch", "permutation degree differs from tuple length");
  RingElem acc = unit;
  for (const auto& cycle : sigma.cycles()) {
    Elem prod = tuple[cycle[0]];
    int i = sigma(cycle[0]);
    while (i != cycle[0]) {
      prod = mul(prod, tuple[i]);
      i = sigma(i);
    }
    acc = acc * tval(prod);
  }
  return acc;
}

}  // namespace

RingElem t_sigma(const CentralFunction& T, const Permutation& sigma, const std::vector<int>& g) {
  const FiniteMonoidTable& table = *T.table();
  return t_sigma_generic<int>(
      sigma, g, [&](int a, int b) { return table.mul(a, b); },
      [&](int a) { return T.value(a); }, RingElem::one(T.context()));
}

RingElem t_sigma_matrices(const std::vector<Matrix>& g, const Permutation& sigma) {
  if (g.empty()) fail("InvalidInput", "empty tuple");
  return t_sigma_generic<Matrix>(
      sigma, g, [](const Matrix& a, const Matrix& b) { return a * b; },
      [](const Matrix& m) { return m.trace(); }, RingElem::one(g[0].context()));
}

RingElem pseudochar_sum(const CentralFunction& T, int d, const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != d + 1)
    fail("DegreeMismatch", "identity needs a (d+1)-tuple");
  RingElem acc = RingElem::zero(T.context());
  for (const auto& sigma : all_permutations(d + 1)) {
    RingElem term = t_sigma(T, sigma, tuple);
    acc = sigma.sign() > 0 ? acc + term : acc - term;
  }
  return acc;
}

Report pseudochar_identity_check(const CentralFunction& T, int d,
                                 const std::optional<std::vector<std::vector<int>>>& tuples,
                                 std::uint64_t exhaustive_cap) {
  Report report;
  report.subcommand = "pseudochar";
  report.params = Json{{"d", d}, {"group_size", T.table()->size()}};
  int m = T.table()->size();

  std::vector<std::vector<int>> work;
  if (tuples) {
    work = *tuples;
  } else {
    std::uint64_t total = 1;
    for (int k = 0; k <= d; ++k) {
      total *= static_cast<std::uint64_t>(m);
      if (total > exhaustive_cap)
        fail("EnumerationTooLarge", "|G|^(d+1) exceeds the exhaustive cap");
    }
    std::vector<int> tuple(d + 1, 0);
    while (true) {
      work.push_back(tuple);
      int pos = d;
      while (pos >= 0 && tuple[pos] == m - 1) tuple[pos--] = 0;
      if (pos < 0) break;
      ++tuple[pos];
    }
  }

  std::vector<std::string> failures(work.size());
  parallel_for(work.size(), [&](std::size_t idx) {
    RingElem v = pseudochar_sum(T, d, work[idx]);
    if (!v.is_zero()) {
      std::ostringstream os;
      os << "tuple (";
      for (std::size_t j = 0; j < work[idx].size(); ++j)
        os << (j ? "," : "") << T.table()->label(work[idx][j]);
      os << ") gives " << v.str();
      failures[idx] = os.str();
    }
  });

  int nfail = 0;
  std::string first;
  for (const auto& f : failures)
    if (!f.empty()) {
      if (first.empty()) first = f;
      ++nfail;
    }
  CheckResult c;
  c.name = "signed degree-" + std::to_string(d + 1) + " trace identity on " +
           std::to_string(work.size()) + " tuples";
  c.anchor = "pseudocharacter-identity";
  c.pass = nfail == 0;
  c.witness = first;
  c.details = Json{{"checked", work.size()}, {"nonzero", nfail}};
  report.add(std::move(c));
  return report;
}

RingElem full_polarization_det(const CentralFunction& T, const std::vector<int>& g) {
  int d = static_cast<int>(g.size());
  RingElem acc = RingElem::zero(T.context());
  for (const auto& sigma : all_permutations(d)) {
    RingElem term = t_sigma(T, sigma, g);
    acc = sigma.sign() > 0 ? acc + term : acc - term;
  }
  return acc;
}

RingElem full_polarization_det_matrices(const std::vector<Matrix>& g) {
  if (g.empty()) fail("InvalidInput", "empty tuple");
  int d = static_cast<int>(g.size());
  RingElem acc = RingElem::zero(g[0].context());
  for (const auto& sigma : all_permutations(d)) {
    RingElem term = t_sigma_matrices(g, sigma);
    acc = sigma.sign() > 0 ? acc + term : acc - term;
  }
  return acc;
}

namespace {

/// Enumerates H = <S_d x S_d, tau> with its character s: pairs of a
/// permutation of degree 2d and the sign s(sigma).
std::vector<std::pair<Permutation, int>> block_swap_group(int d) {
  if (d > 5) fail("EnumerationTooLarge", "partial polarization capped at d <= 5");
  std::vector<std::pair<Permutation, int>> out;
  Permutation tau = Permutation::identity(2 * d);
  for (int i = 0; i < d; ++i) {
    tau.map[i] = d + i;
    tau.map[d + i] = i;
  }
  for (const auto& s1 : all_permutations(d))
    for (const auto& s2 : all_permutations(d)) {
      Permutation block = Permutation::identity(2 * d);
      for (int i = 0; i < d; ++i) {
        block.map[i] = s1(i);
        block.map[d + i] = d + s2(i);
      }
      int sgn = s1.sign() * s2.sign();
      out.push_back({block, sgn});
      out.push_back({block.compose(tau), -sgn});
    }
  return out;
}

template <class Elem, class Mul, class Tval>
RingElem partial_polarization_generic(const std::vector<Elem>& g, const std::vector<Elem>& h,
                                      Mul mul, Tval tval, const RingContextPtr& ctx) {
  if (g.size() != h.size()) fail("DegreeMismatch", "tuples of different length");
  int d = static_cast<int>(g.size());
  std::vector<Elem> tuple = g;
  tuple.insert(tuple.end(), h.begin(), h.end());
  RingElem acc = RingElem::zero(ctx);
  for (const auto& [sigma, sgn] : block_swap_group(d)) {
    RingElem term =
        t_sigma_generic<Elem>(sigma, tuple, mul, tval, RingElem::one(ctx));
    acc = sgn > 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

RingElem partial_polarization_phi(const CentralFunction& T, const std::vector<int>& g,
                                  const std::vector<int>& h) {
  const FiniteMonoidTable& table = *T.table();
  return partial_polarization_generic<int>(
      g, h, [&](int a, int b) { return table.mul(a, b); },
      [&](int a) { return T.value(a); }, T.context());
}

RingElem partial_polarization_phi_matrices(const std::vector<Matrix>& g,
                                           const std::vector<Matrix>& h) {
  if (g.empty()) fail("InvalidInput", "empty tuple");
  return partial_polarization_generic<Matrix>(
      g, h, [](const Matrix& a, const Matrix& b) { return a * b; },
      [](const Matrix& m) { return m.trace(); }, g[0].context());
}

std::vector<RingElem> lambdas_from_traces(const std::vector<RingElem>& powertraces, int d) {
  if (static_cast<int>(powertraces.size()) < d)
    fail("InvalidInput", "need the first d power traces");
  if (d < 1) fail("InvalidInput", "dimension must be >= 1");
  const RingContextPtr& ctx = powertraces[0].context();
  std::vector<RingElem> lambdas = {RingElem::one(ctx)};  // Lambda_0
  for (int i = 1; i <= d; ++i) {
    RingElem ie = RingElem::from_int(ctx, i);
    if (!ie.is_unit())
      fail("FactorialNotInvertible", std::to_string(i) + " is not a unit in " + ctx->describe());
    RingElem acc = RingElem::zero(ctx);
    for (int j = 1; j <= i; ++j) {
      RingElem term = lambdas[i - j] * powertraces[j - 1];
      acc = j % 2 == 1 ? acc + term : acc - term;
    }
    lambdas.push_back(ie.inv() * acc);
  }
  return std::vector<RingElem>(lambdas.begin() + 1, lambdas.end());
}

Report newton_check(const DeterminantLaw& law, const AlgebraElem& r, int order) {
  if (order < 1) fail("InvalidInput", "order must be >= 1");
  Report report;
  report.subcommand = "newton";
  report.params = Json{{"order", order}, {"dim", law.dim()}};
  const FiniteMonoidTable& table = *law.table();
  const RingContextPtr& rctx = r.context();

  auto [ext, vars] = extend_with_vars(rctx, 1, "ser");
  int tvar = vars[0];
  RingElem t = RingElem::variable(ext, tvar);
  AlgebraElem one = delta(table, table.identity(), ext);
  AlgebraElem x = one - embed_elem(r, ext).scaled(t);
  RingElem dser = law.eval(x);  // D(1 - t r)
  RingElem lhs = series_truncated_log_derivative(dser, tvar, order);

  RingElem rhs = RingElem::zero(ext);
  AlgebraElem rpow = delta(table, table.identity(), rctx);
  for (int n = 1; n <= order; ++n) {
    rpow = algebra_mul(rpow, r, table);
    RingElem tr = law.lambda(rpow, 1);
    rhs = rhs + embed(tr, ext) * t.pow(n);
  }

  CheckResult c;
  c.name = "trace generating series -t D'(1-tr)/D(1-tr) to order " + std::to_string(order);
  c.anchor = "newton-relations";
  c.pass = (lhs == rhs);
  if (!c.pass) c.witness = "lhs " + lhs.str() + " vs rhs " + rhs.str();
  report.add(std::move(c));
  return report;
}

}  // namespace detlab
