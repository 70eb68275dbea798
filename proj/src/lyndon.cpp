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

#include "detlab/lyndon.hpp"

namespace detlab {

bool is_lyndon(const Word& w) {
  if (w.empty()) fail("EmptyWord", "is_lyndon on the empty word");
  // w must be <= every proper suffix; a proper prefix of a suffix counts as
  // smaller, which is exactly std::lexicographical_compare semantics.
  for (std::size_t s = 1; s < w.size(); ++s) {
    bool suffix_less = std::lexicographical_compare(w.begin() + s, w.end(), w.begin(), w.end());
    if (suffix_less) return false;
  }
  return true;
}

std::vector<LyndonFactor> cfl_factorize(const Word& w) {
  if (w.empty()) fail("EmptyWord", "factorization of the empty word");
  // Duval's algorithm; consecutive equal factors are merged into exponents.
  std::vector<Word> factors;
  std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      if (w[k] < w[j])
        k = i;
      else
        ++k;
      ++j;
    }
    std::size_t len = j - k;
    while (i <= k) {
      factors.push_back(Word(w.begin() + i, w.begin() + i + len));
      i += len;
    }
  }
  std::vector<LyndonFactor> out;
  for (auto& f : factors) {
    if (!out.empty() && out.back().word == f)
      ++out.back().exponent;
    else
      out.push_back({std::move(f), 1});
  }
  return out;
}

int epsilon_sign(const Word& w) {
  int sign = 1;
  for (const auto& f : cfl_factorize(w)) {
    if (f.word.size() % 2 == 0 && f.exponent % 2 == 1) sign = -sign;
  }
  return sign;
}

RingElem MatrixWordProvider::lambda_word(const Word& factor, int multiplicity) const {
  Matrix prod = elements.at(factor.at(0));
  for (std::size_t k = 1; k < factor.size(); ++k) prod = prod * elements.at(factor[k]);
  return matrix_lambda(prod, multiplicity);
}

RingElem LawWordProvider::zero() const {
  return RingElem::zero(elements.at(0).context());
}

RingElem LawWordProvider::one() const {
  return RingElem::one(elements.at(0).context());
}

RingElem LawWordProvider::lambda_word(const Word& factor, int multiplicity) const {
  const FiniteMonoidTable& table = *law->table();
  AlgebraElem prod = elements.at(factor.at(0));
  for (std::size_t k = 1; k < factor.size(); ++k)
    prod = algebra_mul(prod, elements.at(factor[k]), table);
  return law->lambda(prod, multiplicity);
}

RingElem amitsur_lambda_matrices(const std::vector<Matrix>& elements, int i, std::uint64_t cap) {
  MatrixWordProvider p{elements};
  return amitsur_lambda(p, i, cap);
}

RingElem amitsur_lambda_law(const DeterminantLaw& law, const std::vector<AlgebraElem>& elements,
                            int i, std::uint64_t cap) {
  LawWordProvider p{&law, elements};
  return amitsur_lambda(p, i, cap);
}

Report amitsur_consistency_suite(int d, int n_max, int trials, std::uint64_t seed,
                                 const RingContextPtr& ctx) {
  Report report;
  report.subcommand = "amitsur-consistency";
  report.params = Json{{"d", d}, {"n_max", n_max}, {"trials", trials}, {"seed", seed},
                       {"ring", ctx->describe()}};
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::derive(seed, trial);
    for (int n = 1; n <= n_max; ++n) {
      std::vector<Matrix> mats;
      Matrix sum(d, d, ctx);
      for (int t = 0; t < n; ++t) {
        Matrix m(d, d, ctx);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) m.set(r, c, RingElem::from_int(ctx, rng.range(-9, 9)));
        sum = sum + m;
        mats.push_back(std::move(m));
      }
      for (int i = 0; i <= d; ++i) {
        RingElem via_words = amitsur_lambda_matrices(mats, i);
        RingElem via_charpoly = matrix_lambda(sum, i);
        if (!(via_words == via_charpoly)) {
          CheckResult c;
          c.name = "word expansion vs charpoly, trial " + std::to_string(trial) + ", n=" +
                   std::to_string(n) + ", i=" + std::to_string(i);
          c.anchor = "amitsur-formula";
          c.pass = false;
          c.witness = "words gave " + via_words.str() + ", charpoly gave " + via_charpoly.str();
          report.add(std::move(c));
        }
      }
    }
  }
  CheckResult summary;
  summary.name = "amitsur expansion agrees with charpoly coefficients (d=" + std::to_string(d) +
                 ", n<=" + std::to_string(n_max) + ", " + std::to_string(trials) + " trials)";
  summary.anchor = "amitsur-formula";
  summary.pass = report.all_pass();
  summary.details = Json{{"discrepancies", report.failure_count()}};
  report.add(std::move(summary));
  return report;
}

}  // namespace detlab
