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

#include "detlab/ch_kernel.hpp"

#include <algorithm>

namespace detlab {

AlgebraLaw algebra_law_from_matrices(const FinDimAlgebra& algebra,
                                     std::vector<Matrix> basis_matrices, int d) {
  if (static_cast<int>(basis_matrices.size()) != algebra.dim())
    fail("InvalidInput", "matrix model size differs from the algebra dimension");
  auto mats = std::make_shared<std::vector<Matrix>>(std::move(basis_matrices));
  AlgebraLaw law;
  law.algebra = &algebra;
  law.d = d;
  law.lambda = [mats, d](const AlgVec& v, int i) {
    const RingContextPtr& ctx = v.at(0).context();
    int n = (*mats)[0].rows();
    Matrix acc(n, n, ctx);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      acc = acc + embed_matrix((*mats)[k], ctx).scaled(v[k]);
    }
    (void)d;
    return matrix_lambda(acc, i);
  };
  return law;
}

AlgebraLaw algebra_law_from_det_law(const FinDimAlgebra& algebra, DeterminantLaw det_law) {
  AlgebraLaw law;
  law.algebra = &algebra;
  law.d = det_law.dim();
  law.lambda = [det_law](const AlgVec& v, int i) {
    const RingContextPtr& ctx = v.at(0).context();
    return det_law.lambda(vec_to_algebra_elem(v, ctx), i);
  };
  return law;
}

AlgVec chi_eval(const AlgebraLaw& law, const AlgVec& r) {
  const FinDimAlgebra& R = *law.algebra;
  const RingContextPtr& ctx = r.at(0).context();
  AlgVec acc = R.zero(ctx);
  for (int i = 0; i <= law.d; ++i) {
    RingElem li = law.lambda(r, i);
    AlgVec term = R.scale(R.power(r, law.d - i), li);
    acc = i % 2 == 0 ? R.add(acc, term) : R.sub(acc, term);
  }
  return acc;
}

AlgVec chi_alpha(const AlgebraLaw& law, const std::vector<AlgVec>& elements,
                 const std::vector<int>& alpha) {
  if (elements.size() != alpha.size()) fail("DegreeMismatch", "alpha length differs from tuple length");
  int total = 0;
  for (int a : alpha) total += a;
  if (total != law.d) fail("DegreeMismatch", "|alpha| must equal the law dimension");
  const FinDimAlgebra& R = *law.algebra;
  const RingContextPtr& base = elements.at(0).at(0).context();
  int n = static_cast<int>(elements.size());
  auto [ext, vars] = extend_with_vars(base, n, "chia");
  AlgVec x = R.zero(ext);
  for (int k = 0; k < n; ++k) {
    AlgVec lifted(R.dim(), RingElem::zero(ext));
    for (int c = 0; c < R.dim(); ++c) lifted[c] = embed(elements[k][c], ext);
    x = R.add(x, R.scale(lifted, RingElem::variable(ext, vars[k])));
  }
  AlgVec chi = chi_eval(law, x);
  Monomial target;
  for (int k = 0; k < n; ++k)
    if (alpha[k] > 0) target.factors.push_back({vars[k], alpha[k]});
  std::sort(target.factors.begin(), target.factors.end());
  AlgVec out(R.dim(), RingElem::zero(base));
  for (int c = 0; c < R.dim(); ++c)
    out[c] = restrict_context(chi[c].poly_coeff(target), base);
  return out;
}

Subspace ch_ideal(const AlgebraLaw& law, int max_tuple) {
  const FinDimAlgebra& R = *law.algebra;
  const RingContextPtr& ctx = R.context();
  if (!ctx->is_field()) fail("NotAField", "CH ideal computation needs a field base");
  int m = R.dim();
  int d = law.d;
  int nmax = max_tuple > 0 ? max_tuple : d;

  Subspace ideal(ctx, m);
  // generators: chi_alpha on combinations (with repetition) of basis elements
  std::vector<int> combo;
  std::function<void(int, int)> recurse = [&](int start, int remaining) {
    if (remaining == 0) {
      std::vector<AlgVec> tuple;
      for (int idx : combo) tuple.push_back(R.basis_vec(idx, ctx));
      int n = static_cast<int>(tuple.size());
      // all alpha in N^n with |alpha| = d and every entry >= 1
      std::vector<int> alpha(n, 1);
      int extra = d - n;
      std::function<void(int, int)> spread = [&](int pos, int left) {
        if (pos == n - 1) {
          alpha[pos] += left;
          ideal.insert(chi_alpha(law, tuple, alpha));
          alpha[pos] -= left;
          return;
        }
        for (int give = 0; give <= left; ++give) {
          alpha[pos] += give;
          spread(pos + 1, left - give);
          alpha[pos] -= give;
        }
      };
      if (extra >= 0) spread(0, extra);
      return;
    }
    for (int i = start; i < m; ++i) {
      combo.push_back(i);
      recurse(i, remaining - 1);
      combo.pop_back();
    }
  };
  for (int n = 1; n <= std::min(nmax, d); ++n) recurse(0, n);

  // close under left/right multiplication by basis elements
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<RingElem>> snapshot = ideal.basis();
    for (const auto& v : snapshot)
      for (int b = 0; b < m; ++b) {
        if (ideal.insert(R.mul(R.basis_vec(b, ctx), v))) grew = true;
        if (ideal.insert(R.mul(v, R.basis_vec(b, ctx)))) grew = true;
      }
  }
  return ideal;
}

Subspace radical(const FinDimAlgebra& algebra) {
  const RingContextPtr& ctx = algebra.context();
  if (!ctx->is_field()) fail("NotAField", "radical computation needs a field base");
  Int p = ctx->characteristic();
  if (p != 0 && p <= algebra.dim())
    fail("CharacteristicTooSmall", "need characteristic 0 or > " + std::to_string(algebra.dim()));
  int m = algebra.dim();
  // Gram matrix of (x,y) -> trace of left multiplication by x*y
  std::vector<std::vector<RingElem>> gram(m, std::vector<RingElem>(m, RingElem::zero(ctx)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      AlgVec prod = algebra.mul(algebra.basis_vec(i, ctx), algebra.basis_vec(j, ctx));
      gram[i][j] = algebra.left_multiplication(prod).trace();
    }
  Subspace rad(ctx, m);
  for (auto& v : nullspace(ctx, gram)) rad.insert(std::move(v));

  // sanity: the trace-form kernel must be a nilpotent two-sided ideal
  std::vector<std::vector<RingElem>> current = rad.basis();
  for (int step = 0; step < m && !current.empty(); ++step) {
    std::vector<std::vector<RingElem>> next;
    Subspace span(ctx, m);
    for (const auto& a : current)
      for (const auto& b : rad.basis()) {
        AlgVec prod = algebra.mul(a, b);
        if (!algebra.is_zero_vec(prod) && span.insert(prod)) next.push_back(prod);
      }
    current = std::move(next);
  }
  if (!current.empty()) fail("Internal", "trace-form kernel is not nilpotent");
  return rad;
}

namespace {
std::vector<RingElem> flatten(const Matrix& m) {
  std::vector<RingElem> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}
}  // namespace

ImageAlgebra image_algebra(const MatrixRep& rep) {
  const RingContextPtr& ctx = rep.context();
  if (!ctx->is_field()) fail("NotAField", "image algebra needs a field base");
  int m = rep.table()->size();
  // pick a basis among the images (their span is already closed under
  // products, every product of images is an image)
  Subspace span(ctx, rep.dim() * rep.dim());
  std::vector<int> basis_elems;
  for (int g = 0; g < m; ++g)
    if (span.insert(flatten(rep.image(g)))) basis_elems.push_back(g);
  int dim = static_cast<int>(basis_elems.size());

  std::vector<Matrix> basis_mats;
  std::vector<std::vector<RingElem>> basis_flat;
  for (int g : basis_elems) {
    basis_mats.push_back(rep.image(g));
    basis_flat.push_back(flatten(rep.image(g)));
  }
  auto coords_of = [&](const Matrix& M) {
    auto sol = solve_in_span(ctx, basis_flat, flatten(M));
    if (!sol) fail("Internal", "image escapes the image span");
    return *sol;
  };

  std::vector<std::vector<AlgVec>> sc(dim, std::vector<AlgVec>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) sc[i][j] = coords_of(basis_mats[i] * basis_mats[j]);
  AlgVec unit = coords_of(Matrix::identity(rep.dim(), ctx));
  std::vector<std::string> labels;
  for (int g : basis_elems) labels.push_back("rho(" + rep.table()->label(g) + ")");
  ImageAlgebra out{FinDimAlgebra(ctx, std::move(sc), std::move(unit), std::move(labels), false),
                   std::move(basis_mats),
                   {}};
  for (int g = 0; g < m; ++g) out.element_coords.push_back(coords_of(rep.image(g)));
  return out;
}

Subspace kernel_of_det(const MatrixRep& rep) {
  const RingContextPtr& ctx = rep.context();
  ImageAlgebra img = image_algebra(rep);
  Subspace rad = radical(img.algebra);
  int m = rep.table()->size();
  int sdim = img.algebra.dim();

  // preimage of Rad(S) under the linear map k[G] -> S: kernel of the
  // composite k[G] -> S/Rad(S)
  std::vector<std::vector<RingElem>> residues;
  for (int g = 0; g < m; ++g) residues.push_back(rad.reduce(img.element_coords[g]));
  // rows index the S-coordinates, columns the group elements
  std::vector<std::vector<RingElem>> map_rows(sdim, std::vector<RingElem>(m, RingElem::zero(ctx)));
  for (int g = 0; g < m; ++g)
    for (int c = 0; c < sdim; ++c) map_rows[c][g] = residues[g][c];
  Subspace kernel(ctx, m);
  for (auto& v : nullspace(ctx, map_rows)) kernel.insert(std::move(v));

  // a posteriori certification: Lambda_i(x * y) = 0 identically for every
  // spanning x and a generic y
  DeterminantLaw law = DeterminantLaw::matrix_det(std::make_shared<MatrixRep>(rep));
  const FiniteMonoidTable& table = *rep.table();
  std::vector<int> all;
  for (int g = 0; g < m; ++g) all.push_back(g);
  GenericElement gen = generic_element(all, table, ctx);
  for (const auto& row : kernel.basis()) {
    AlgebraElem x = vec_to_algebra_elem(row, ctx);
    AlgebraElem xy = algebra_mul(embed_elem(x, gen.ctx), gen.elem, table);
    for (int i = 1; i <= rep.dim(); ++i)
      if (!law.lambda(xy, i).is_zero())
        fail("Internal", "kernel certification failed: Lambda_" + std::to_string(i) +
                             "(x*y) != 0 for x = " + x.str(table));
  }
  return kernel;
}

int subalgebra_span(const std::vector<Matrix>& generators) {
  if (generators.empty()) fail("InvalidInput", "need at least one generator");
  const RingContextPtr& ctx = generators[0].context();
  if (!ctx->is_field()) fail("NotAField", "span computation needs a field base");
  int n = generators[0].rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) fail("DimensionMismatch", "generators must share one size");

  Subspace span(ctx, n * n);
  std::vector<Matrix> reps;
  auto push = [&](const Matrix& m) {
    if (span.insert(flatten(m))) {
      reps.push_back(m);
      return true;
    }
    return false;
  };
  push(Matrix::identity(n, ctx));
  for (const auto& g : generators) push(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Matrix> snapshot = reps;
    for (const auto& r : snapshot)
      for (const auto& g : generators) {
        if (push(r * g)) grew = true;
        if (push(g * r)) grew = true;
      }
  }
  return span.dim();
}

GramCertificate gram_irreducibility(const DeterminantLaw& law, int restarts, std::uint64_t seed) {
  const RingContextPtr& ctx = law.base_context();
  const FiniteMonoidTable& table = *law.table();
  int m = table.size();
  int target = law.dim() * law.dim();

  // pool: the monoid elements themselves (their pairwise products are again
  // monoid elements)
  std::vector<std::vector<RingElem>> tr(m, std::vector<RingElem>(m, RingElem::zero(ctx)));
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) tr[g][h] = law.lambda_element(table.mul(g, h), 1);

  auto gram_rank = [&](const std::vector<int>& tuple) {
    std::vector<std::vector<RingElem>> rows;
    for (int a : tuple) {
      std::vector<RingElem> row;
      for (int b : tuple) row.push_back(tr[a][b]);
      rows.push_back(std::move(row));
    }
    return row_rank(ctx, std::move(rows));
  };

  GramCertificate best;
  auto greedy = [&](std::vector<int> order) {
    std::vector<int> tuple;
    int rank = 0;
    for (int g : order) {
      tuple.push_back(g);
      int r = gram_rank(tuple);
      if (r > rank)
        rank = r;
      else
        tuple.pop_back();
      if (rank == target && static_cast<int>(tuple.size()) == target) break;
    }
    if (rank > best.best_rank) {
      best.best_rank = rank;
      best.elements = tuple;
    }
    if (rank == target && static_cast<int>(tuple.size()) == target) {
      best.found = true;
      best.elements = tuple;
      best.best_rank = rank;
    }
  };

  std::vector<int> order;
  for (int g = 0; g < m; ++g) order.push_back(g);
  greedy(order);
  for (int r = 0; r < restarts && !best.found; ++r) {
    Rng rng = Rng::derive(seed, r);
    std::vector<int> shuffled = order;
    for (int i = m - 1; i > 0; --i)
      std::swap(shuffled[i], shuffled[rng.range(0, i)]);
    greedy(shuffled);
  }
  return best;
}

}  // namespace detlab
