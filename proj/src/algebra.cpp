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

#include "detlab/algebra.hpp"

#include <sstream>

namespace detlab {

FinDimAlgebra::FinDimAlgebra(RingContextPtr ctx, std::vector<std::vector<AlgVec>> structure,
                             AlgVec unit, std::vector<std::string> labels, bool check)
    : ctx_(std::move(ctx)),
      dim_(static_cast<int>(structure.size())),
      structure_(std::move(structure)),
      unit_(std::move(unit)),
      labels_(std::move(labels)) {
  if (labels_.empty())
    for (int i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  if (static_cast<int>(labels_.size()) != dim_) fail("InvalidInput", "label count mismatch");
  for (const auto& row : structure_)
    if (static_cast<int>(row.size()) != dim_) fail("InvalidInput", "structure constants not square");
  if (static_cast<int>(unit_.size()) != dim_) fail("InvalidInput", "unit vector size mismatch");
  if (!check) return;
  // unit axiom
  for (int i = 0; i < dim_; ++i) {
    AlgVec e = basis_vec(i, ctx_);
    if (!vec_eq(mul(unit_, e), e) || !vec_eq(mul(e, unit_), e))
      fail("InvalidInput", "unit axiom fails at basis element " + std::to_string(i));
  }
  // associativity on basis triples
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      AlgVec ij = structure_[i][j];
      for (int k = 0; k < dim_; ++k) {
        AlgVec left = mul(ij, basis_vec(k, ctx_));
        AlgVec right = mul(basis_vec(i, ctx_), structure_[j][k]);
        if (!vec_eq(left, right))
          fail("NotAssociative", "structure constants fail at (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
}

bool FinDimAlgebra::vec_eq(const AlgVec& a, const AlgVec& b) const {
  for (int i = 0; i < dim_; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

AlgVec FinDimAlgebra::zero(const RingContextPtr& ctx) const {
  return AlgVec(dim_, RingElem::zero(ctx));
}

AlgVec FinDimAlgebra::one(const RingContextPtr& ctx) const {
  AlgVec v;
  v.reserve(dim_);
  for (const auto& c : unit_) v.push_back(embed(c, ctx));
  return v;
}

AlgVec FinDimAlgebra::basis_vec(int i, const RingContextPtr& ctx) const {
  AlgVec v = zero(ctx);
  v[i] = RingElem::one(ctx);
  return v;
}

AlgVec FinDimAlgebra::mul(const AlgVec& a, const AlgVec& b) const {
  const RingContextPtr& ctx = a.empty() ? ctx_ : a[0].context();
  AlgVec out = zero(ctx);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      RingElem c = a[i] * b[j];
      const AlgVec& sc = structure_[i][j];
      for (int k = 0; k < dim_; ++k) {
        if (sc[k].is_zero()) continue;
        out[k] = out[k] + c * embed(sc[k], ctx);
      }
    }
  }
  return out;
}

AlgVec FinDimAlgebra::add(const AlgVec& a, const AlgVec& b) const {
  AlgVec out;
  out.reserve(dim_);
  for (int i = 0; i < dim_; ++i) out.push_back(a[i] + b[i]);
  return out;
}

AlgVec FinDimAlgebra::sub(const AlgVec& a, const AlgVec& b) const {
  AlgVec out;
  out.reserve(dim_);
  for (int i = 0; i < dim_; ++i) out.push_back(a[i] - b[i]);
  return out;
}

AlgVec FinDimAlgebra::scale(const AlgVec& a, const RingElem& c) const {
  AlgVec out;
  out.reserve(dim_);
  for (int i = 0; i < dim_; ++i) out.push_back(a[i] * c);
  return out;
}

AlgVec FinDimAlgebra::power(const AlgVec& a, unsigned e) const {
  const RingContextPtr& ctx = a.empty() ? ctx_ : a[0].context();
  AlgVec acc = one(ctx);
  for (unsigned i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

bool FinDimAlgebra::is_zero_vec(const AlgVec& a) const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

std::string FinDimAlgebra::vec_str(const AlgVec& a) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << a[i].str() << ")*" << labels_[i];
  }
  if (first) os << "0";
  return os.str();
}

Matrix FinDimAlgebra::left_multiplication(const AlgVec& a) const {
  const RingContextPtr& ctx = a.empty() ? ctx_ : a[0].context();
  Matrix m(dim_, dim_, ctx);
  for (int j = 0; j < dim_; ++j) {
    AlgVec col = mul(a, basis_vec(j, ctx));
    for (int i = 0; i < dim_; ++i) m.set(i, j, col[i]);
  }
  return m;
}

FinDimAlgebra group_algebra_findim(const MonoidPtr& table, const RingContextPtr& ctx) {
  int m = table->size();
  std::vector<std::vector<AlgVec>> sc(m, std::vector<AlgVec>(m, AlgVec(m, RingElem::zero(ctx))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sc[i][j][table->mul(i, j)] = RingElem::one(ctx);
  AlgVec unit(m, RingElem::zero(ctx));
  unit[table->identity()] = RingElem::one(ctx);
  return FinDimAlgebra(ctx, std::move(sc), std::move(unit), table->labels(), false);
}

namespace {
FinDimAlgebra matrix_units_algebra(const std::vector<std::pair<int, int>>& units, int n,
                                   const RingContextPtr& ctx) {
  int dim = static_cast<int>(units.size());
  auto find_unit = [&](int i, int j) {
    for (int k = 0; k < dim; ++k)
      if (units[k] == std::make_pair(i, j)) return k;
    return -1;
  };
  std::vector<std::vector<AlgVec>> sc(dim, std::vector<AlgVec>(dim, AlgVec(dim, RingElem::zero(ctx))));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      auto [i, j] = units[a];
      auto [k, l] = units[b];
      if (j == k) {
        int target = find_unit(i, l);
        if (target < 0) fail("Internal", "matrix unit product escapes the basis");
        sc[a][b][target] = RingElem::one(ctx);
      }
    }
  AlgVec unit(dim, RingElem::zero(ctx));
  std::vector<std::string> labels;
  for (int a = 0; a < dim; ++a) {
    auto [i, j] = units[a];
    if (i == j) unit[a] = RingElem::one(ctx);
    labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  (void)n;
  return FinDimAlgebra(ctx, std::move(sc), std::move(unit), std::move(labels), false);
}
}  // namespace

FinDimAlgebra full_matrix_algebra(int n, const RingContextPtr& ctx) {
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) units.push_back({i, j});
  return matrix_units_algebra(units, n, ctx);
}

FinDimAlgebra upper_triangular_algebra(int n, const RingContextPtr& ctx) {
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) units.push_back({i, j});
  return matrix_units_algebra(units, n, ctx);
}

namespace {
std::vector<Matrix> unit_matrices(const std::vector<std::pair<int, int>>& units, int n,
                                  const RingContextPtr& ctx) {
  std::vector<Matrix> out;
  for (auto [i, j] : units) {
    Matrix m(n, n, ctx);
    m.set(i, j, RingElem::one(ctx));
    out.push_back(std::move(m));
  }
  return out;
}
}  // namespace

std::vector<Matrix> matrix_algebra_basis(int n, const RingContextPtr& ctx) {
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) units.push_back({i, j});
  return unit_matrices(units, n, ctx);
}

std::vector<Matrix> upper_triangular_basis(int n, const RingContextPtr& ctx) {
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) units.push_back({i, j});
  return unit_matrices(units, n, ctx);
}

AlgVec algebra_elem_to_vec(const AlgebraElem& x, int dim) {
  AlgVec v(dim, RingElem::zero(x.context()));
  for (const auto& [g, c] : x.terms()) {
    if (g >= dim) fail("IndexOutOfRange", "element index beyond dimension");
    v[g] = c;
  }
  return v;
}

AlgebraElem vec_to_algebra_elem(const AlgVec& v, const RingContextPtr& ctx) {
  std::map<int, RingElem> terms;
  for (std::size_t g = 0; g < v.size(); ++g)
    if (!v[g].is_zero()) terms.emplace(static_cast<int>(g), v[g]);
  return AlgebraElem(ctx, std::move(terms));
}

// ---- field linear algebra -----------------------------------------------

Subspace::Subspace(RingContextPtr ctx, int ambient_dim) : ctx_(std::move(ctx)), n_(ambient_dim) {
  if (!ctx_->is_field()) fail("NotAField", "subspaces need a field context, got " + ctx_->describe());
}

std::vector<RingElem> Subspace::reduce(std::vector<RingElem> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    RingElem c = v[pivots_[r]];  // copy: the loop below overwrites the pivot slot
    if (c.is_zero()) continue;
    for (int j = 0; j < n_; ++j) v[j] = v[j] - c * rows_[r][j];
  }
  return v;
}

bool Subspace::contains(const std::vector<RingElem>& v) const {
  for (const auto& c : reduce(v))
    if (!c.is_zero()) return false;
  return true;
}

bool Subspace::contains_subspace(const Subspace& other) const {
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

bool Subspace::same_subspace(const Subspace& other) const {
  return dim() == other.dim() && contains_subspace(other);
}

bool Subspace::insert(std::vector<RingElem> v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < n_; ++j)
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  RingElem inv = v[pivot].inv();
  for (int j = 0; j < n_; ++j) v[j] = v[j] * inv;
  // back-substitute into existing rows to keep reduced echelon form
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    RingElem c = rows_[r][pivot];  // copy: the loop below overwrites the pivot slot
    if (c.is_zero()) continue;
    for (int j = 0; j < n_; ++j) rows_[r][j] = rows_[r][j] - c * v[j];
  }
  // insert keeping pivots sorted
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

int row_rank(const RingContextPtr& ctx, std::vector<std::vector<RingElem>> rows) {
  if (rows.empty()) return 0;
  Subspace s(ctx, static_cast<int>(rows[0].size()));
  for (auto& r : rows) s.insert(std::move(r));
  return s.dim();
}

std::vector<std::vector<RingElem>> nullspace(const RingContextPtr& ctx,
                                             const std::vector<std::vector<RingElem>>& rows) {
  if (rows.empty()) return {};
  int m = static_cast<int>(rows.size());
  int n = static_cast<int>(rows[0].size());
  // Gauss over the field with column pivots
  std::vector<std::vector<RingElem>> a = rows;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    RingElem inv = a[r][c].inv();
    for (int j = 0; j < n; ++j) a[r][j] = a[r][j] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      RingElem f = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<RingElem>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<RingElem> v(n, RingElem::zero(ctx));
    v[c] = RingElem::one(ctx);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = a[i][c].neg();
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<RingElem>> solve_in_span(const RingContextPtr& ctx,
                                                   const std::vector<std::vector<RingElem>>& vectors,
                                                   const std::vector<RingElem>& target) {
  int k = static_cast<int>(vectors.size());
  if (k == 0) {
    for (const auto& c : target)
      if (!c.is_zero()) return std::nullopt;
    return std::vector<RingElem>{};
  }
  int n = static_cast<int>(vectors[0].size());
  // augmented system: columns = vectors, rhs = target
  std::vector<std::vector<RingElem>> a(n, std::vector<RingElem>(k + 1, RingElem::zero(ctx)));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) a[i][j] = vectors[j][i];
  for (int i = 0; i < n; ++i) a[i][k] = target[i];
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < k && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    RingElem inv = a[r][c].inv();
    for (int j = 0; j <= k; ++j) a[r][j] = a[r][j] * inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      RingElem f = a[i][c];
      for (int j = 0; j <= k; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i)
    if (!a[i][k].is_zero()) return std::nullopt;
  std::vector<RingElem> x(k, RingElem::zero(ctx));
  for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) x[pivot_col[i]] = a[i][k];
  return x;
}

// ---- integer lattices -----------------------------------------------------

IntMat lattice_row_basis(IntMat rows) {
  if (rows.empty()) return rows;
  std::size_t n = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    // euclidean elimination in this column below `rank`
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = rank; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() ||
            boost::multiprecision::abs(rows[i][col]) < boost::multiprecision::abs(rows[best][col]))
          best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[rank], rows[best]);
      bool reduced_all = true;
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[rank][col];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[rank][j];
        if (rows[i][col] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (rank < rows.size() && rows[rank][col] != 0) ++rank;
  }
  rows.resize(rank);
  return rows;
}

namespace {
IntMat identity_mat(int n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}
}  // namespace

SmithResult smith_normal_form(IntMat m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  SmithResult out;
  out.rows = rows;
  out.cols = cols;
  out.V = identity_mat(cols);
  out.V_inv = identity_mat(cols);

  auto col_op_sub = [&](int target, int src, const Int& q) {
    // column target -= q * column src  (V tracks right multiplication)
    for (int i = 0; i < rows; ++i) m[i][target] -= q * m[i][src];
    for (int i = 0; i < cols; ++i) out.V[i][target] -= q * out.V[i][src];
    for (int j = 0; j < cols; ++j) out.V_inv[src][j] += q * out.V_inv[target][j];
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    for (int i = 0; i < cols; ++i) std::swap(out.V[i][a], out.V[i][b]);
    std::swap(out.V_inv[a], out.V_inv[b]);
  };
  auto col_negate = [&](int a) {
    for (int i = 0; i < rows; ++i) m[i][a] = -m[i][a];
    for (int i = 0; i < cols; ++i) out.V[i][a] = -out.V[i][a];
    for (int j = 0; j < cols; ++j) out.V_inv[a][j] = -out.V_inv[a][j];
  };
  auto row_swap = [&](int a, int b) { std::swap(m[a], m[b]); };
  auto row_op_sub = [&](int target, int src, const Int& q) {
    for (int j = 0; j < cols; ++j) m[target][j] -= q * m[src][j];
  };

  int t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot in the bottom-right block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int a = boost::multiprecision::abs(m[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        row_op_sub(i, t, q);
        if (m[i][t] != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        col_op_sub(j, t, q);
        if (m[t][j] != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
    }
    // enforce divisibility: pivot must divide every later entry
    bool restart = false;
    for (int i = t + 1; i < rows && !restart; ++i)
      for (int j = t + 1; j < cols && !restart; ++j)
        if (m[i][j] % m[t][t] != 0) {
          // add row i to row t and restart the elimination at t
          row_op_sub(t, i, Int(-1));
          restart = true;
        }
    if (restart) continue;
    if (m[t][t] < 0) col_negate(t);
    ++t;
  }
  for (int i = 0; i < t; ++i) out.divisors.push_back(m[i][i]);
  return out;
}

}  // namespace detlab
