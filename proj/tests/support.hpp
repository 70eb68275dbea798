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

#ifndef DETLAB_TESTS_SUPPORT_HPP
#define DETLAB_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "detlab/json_io.hpp"
#include "detlab/lyndon.hpp"
#include "detlab/matrix.hpp"

namespace detlab::testsupport {

inline std::string corpus_path(const std::string& file) {
  return std::string(DETLAB_CORPUS_DIR) + "/" + file;
}

inline Json corpus_json(const std::string& file) { return parse_json_file(corpus_path(file)); }

inline std::shared_ptr<MatrixRep> corpus_rep(const std::string& file) {
  return rep_from_json(corpus_json(file));
}

inline MonoidPtr corpus_group(const std::string& file) {
  return group_from_json(corpus_json(file));
}

// ---- independent oracles, deliberately naive --------------------------------

/// Cofactor-expansion determinant; independent of the Berkowitz path.
inline RingElem cofactor_det(const Matrix& m) {
  int n = m.rows();
  if (n == 0) return RingElem::one(m.context());
  if (n == 1) return m.at(0, 0);
  RingElem acc = RingElem::zero(m.context());
  for (int j = 0; j < n; ++j) {
    Matrix minor(n - 1, n - 1, m.context());
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.set(r - 1, cc++, m.at(r, c));
      }
    }
    RingElem term = m.at(0, j) * cofactor_det(minor);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

/// Characteristic polynomial through cofactor expansion of tI - M over a
/// polynomial extension; the oracle for the division-free route.
inline std::vector<RingElem> cofactor_charpoly(const Matrix& m) {
  auto [ext, vars] = extend_with_vars(m.context(), 1, "oracle_t");
  Matrix shifted = Matrix::identity(m.rows(), ext).scaled(RingElem::variable(ext, vars[0])) -
                   embed_matrix(m, ext);
  RingElem chi = cofactor_det(shifted);
  std::vector<RingElem> out;
  for (int i = 0; i <= m.rows(); ++i)
    out.push_back(restrict_context(chi.coeff_in_var(vars[0], m.rows() - i), m.context()));
  return out;
}

/// Extended-Euclid modular inverse, used as the oracle for unit inversion.
inline long long euclid_inverse(long long a, long long n) {
  long long old_r = a % n, r = n, old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  long long result = old_s % n;
  return result < 0 ? result + n : result;
}

/// All decompositions of w into a nonincreasing product of Lyndon words
/// (brute force); Lyndon's theorem says there is exactly one.
inline void lyndon_decompositions(const Word& w, std::size_t start, std::vector<Word>& current,
                                  std::vector<std::vector<Word>>& found) {
  if (start == w.size()) {
    found.push_back(current);
    return;
  }
  for (std::size_t end = start + 1; end <= w.size(); ++end) {
    Word piece(w.begin() + start, w.begin() + end);
    if (!is_lyndon(piece)) continue;
    if (!current.empty() &&
        std::lexicographical_compare(current.back().begin(), current.back().end(), piece.begin(),
                                     piece.end()))
      continue;  // factors must be nonincreasing
    current.push_back(piece);
    lyndon_decompositions(w, end, current, found);
    current.pop_back();
  }
}

inline std::vector<std::vector<Word>> all_lyndon_decompositions(const Word& w) {
  std::vector<std::vector<Word>> found;
  std::vector<Word> current;
  lyndon_decompositions(w, 0, current, found);
  return found;
}

inline Matrix random_int_matrix(int d, const RingContextPtr& ctx, Rng& rng, int lo = -9,
                                int hi = 9) {
  Matrix m(d, d, ctx);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.set(i, j, RingElem::from_int(ctx, rng.range(lo, hi)));
  return m;
}

}  // namespace detlab::testsupport

#endif  // DETLAB_TESTS_SUPPORT_HPP
