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

#include "detlab/matrix.hpp"

#include <sstream>

namespace detlab {

Matrix::Matrix(int rows, int cols, const RingContextPtr& ctx)
    : rows_(rows), cols_(cols), ctx_(ctx) {
  data_.assign(static_cast<std::size_t>(rows) * cols, RingElem::zero(ctx));
}

Matrix Matrix::identity(int n, const RingContextPtr& ctx) {
  Matrix m(n, n, ctx);
  for (int i = 0; i < n; ++i) m.set(i, i, RingElem::one(ctx));
  return m;
}

Matrix Matrix::from_rows(const RingContextPtr& ctx, std::vector<std::vector<RingElem>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c, ctx);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) fail("InvalidInput", "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.set(i, j, std::move(rows[i][j]));
  }
  return m;
}

void Matrix::set(int i, int j, RingElem v) {
  if (!same_context(v.context(), ctx_)) fail("ContextMismatch", "matrix entry context differs");
  data_[i * cols_ + j] = std::move(v);
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail("DimensionMismatch", "matrix addition shapes differ");
  Matrix out(rows_, cols_, ctx_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + rhs.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail("DimensionMismatch", "matrix subtraction shapes differ");
  Matrix out(rows_, cols_, ctx_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - rhs.data_[k];
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) fail("DimensionMismatch", "matrix product shapes differ");
  Matrix out(rows_, rhs.cols_, ctx_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rhs.cols_; ++j) {
      RingElem acc = RingElem::zero(ctx_);
      for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * rhs.at(k, j);
      out.set(i, j, std::move(acc));
    }
  return out;
}

Matrix Matrix::scaled(const RingElem& c) const {
  Matrix out(rows_, cols_, ctx_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * c;
  return out;
}

RingElem Matrix::trace() const {
  if (rows_ != cols_) fail("NonSquare", "trace of a non-square matrix");
  RingElem acc = RingElem::zero(ctx_);
  for (int i = 0; i < rows_; ++i) acc = acc + at(i, i);
  return acc;
}

bool Matrix::operator==(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!(data_[k] == rhs.data_[k])) return false;
  return true;
}

Matrix Matrix::pow(unsigned e) const {
  if (rows_ != cols_) fail("NonSquare", "power of a non-square matrix");
  Matrix acc = identity(rows_, ctx_);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

Matrix embed_matrix(const Matrix& m, const RingContextPtr& target) {
  Matrix out(m.rows(), m.cols(), target);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, embed(m.at(i, j), target));
  return out;
}

std::vector<RingElem> berkowitz_charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) fail("NonSquare", "characteristic polynomial of a non-square matrix");
  const RingContextPtr& ctx = m.context();
  int n = m.rows();
  if (n == 0) return {RingElem::one(ctx)};
  std::vector<RingElem> v = {RingElem::one(ctx), m.at(0, 0).neg()};
  for (int k = 2; k <= n; ++k) {
    // principal block split: B = (k-1)x(k-1), R = row k-1, S = column k-1
    // Toeplitz column: 1, -a, -(R S), -(R B S), -(R B^2 S), ...
    std::vector<RingElem> col;
    col.reserve(k + 1);
    col.push_back(RingElem::one(ctx));
    col.push_back(m.at(k - 1, k - 1).neg());
    std::vector<RingElem> w(k - 1);
    for (int i = 0; i < k - 1; ++i) w[i] = m.at(i, k - 1);
    for (int i = 2; i <= k; ++i) {
      RingElem dot = RingElem::zero(ctx);
      for (int j = 0; j < k - 1; ++j) dot = dot + m.at(k - 1, j) * w[j];
      col.push_back(dot.neg());
      if (i < k) {
        std::vector<RingElem> bw(k - 1, RingElem::zero(ctx));
        for (int r = 0; r < k - 1; ++r) {
          RingElem acc = RingElem::zero(ctx);
          for (int c = 0; c < k - 1; ++c) acc = acc + m.at(r, c) * w[c];
          bw[r] = std::move(acc);
        }
        w = std::move(bw);
      }
    }
    std::vector<RingElem> next(k + 1, RingElem::zero(ctx));
    for (int j = 0; j <= k; ++j)
      for (int s = 0; s < static_cast<int>(v.size()); ++s) {
        int c = j - s;
        if (c < 0 || c > k) continue;
        next[j] = next[j] + col[c] * v[s];
      }
    v = std::move(next);
  }
  return v;
}

RingElem det(const Matrix& m) {
  std::vector<RingElem> c = berkowitz_charpoly(m);
  int n = m.rows();
  RingElem last = c[n];  // (-1)^n det
  return n % 2 == 0 ? last : last.neg();
}

RingElem matrix_lambda(const Matrix& m, int i) {
  if (i < 0) fail("InvalidInput", "negative lambda index");
  int n = m.rows();
  if (i == 0) return RingElem::one(m.context());
  if (i > n) return RingElem::zero(m.context());
  std::vector<RingElem> c = berkowitz_charpoly(m);
  return i % 2 == 0 ? c[i] : c[i].neg();
}

RingElem tensor_sigma_trace(const std::vector<Matrix>& matrices, const Permutation& sigma) {
  int n = static_cast<int>(matrices.size());
  if (sigma.degree() != n) fail("DegreeMismatch", "permutation degree differs from tuple length");
  if (n == 0) fail("InvalidInput", "empty matrix tuple");
  const RingContextPtr& ctx = matrices[0].context();
  int d = matrices[0].rows();
  for (const auto& m : matrices) {
    if (m.rows() != d || m.cols() != d) fail("DimensionMismatch", "matrices must share one square size");
    if (!same_context(m.context(), ctx)) fail("ContextMismatch", "matrices over different contexts");
  }
  // trace = sum over multi-indices (i_1..i_n) of prod_k M_k[i_k][i_{sigma(k)}]
  std::vector<int> idx(n, 0);
  RingElem acc = RingElem::zero(ctx);
  while (true) {
    RingElem term = RingElem::one(ctx);
    for (int k = 0; k < n && !term.is_zero(); ++k) term = term * matrices[k].at(idx[k], idx[sigma(k)]);
    acc = acc + term;
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == d - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return acc;
}

MatrixRep::MatrixRep(int d, MonoidPtr table, std::vector<Matrix> images)
    : d_(d), table_(std::move(table)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != table_->size())
    fail("InvalidInput", "image count differs from monoid size");
  ctx_ = images_[0].context();
  for (const auto& m : images_) {
    if (m.rows() != d_ || m.cols() != d_) fail("DimensionMismatch", "image is not d x d");
    if (!same_context(m.context(), ctx_)) fail("ContextMismatch", "images over different contexts");
  }
  if (!(images_[table_->identity()] == Matrix::identity(d_, ctx_)))
    fail("NotAHomomorphism", "identity does not map to the identity matrix");
  int m = table_->size();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (!(images_[x] * images_[y] == images_[table_->mul(x, y)]))
        fail("NotAHomomorphism", "images violate the table at (" + std::to_string(x) + "," +
                                     std::to_string(y) + ")");
}

Matrix MatrixRep::image_of(const AlgebraElem& x) const {
  const RingContextPtr& target = x.context();
  Matrix acc(d_, d_, target);
  for (const auto& [g, c] : x.terms()) {
    if (g < 0 || g >= table_->size()) fail("IndexOutOfRange", "element index " + std::to_string(g));
    acc = acc + embed_matrix(images_[g], target).scaled(c);
  }
  return acc;
}

std::shared_ptr<MatrixRep> MatrixRep::from_generators(const PermutationClosure& closure,
                                                      const std::vector<Matrix>& generator_images) {
  int m = closure.table->size();
  if (m == 0) fail("InvalidInput", "empty closure");
  const RingContextPtr& ctx =
      generator_images.empty() ? RingContext::integers() : generator_images[0].context();
  int d = generator_images.empty() ? 1 : generator_images[0].rows();
  std::vector<Matrix> images;
  images.reserve(m);
  for (int i = 0; i < m; ++i) images.push_back(Matrix::identity(d, ctx));
  for (int i = 1; i < m; ++i) {
    auto [prev, gen] = closure.parents[i];
    images[i] = images[prev] * generator_images[gen];
  }
  return std::make_shared<MatrixRep>(d, closure.table, std::move(images));
}

}  // namespace detlab
