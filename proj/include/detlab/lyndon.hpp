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

#ifndef DETLAB_LYNDON_HPP
#define DETLAB_LYNDON_HPP

#include <cstdint>
#include <vector>

#include "detlab/laws.hpp"
#include "detlab/report.hpp"

namespace detlab {

/// A word over an alphabet of element indices.
using Word = std::vector<int>;

/// True when w is <= every proper suffix in lexicographic order (with the
/// empty word smaller than any letter).  EmptyWord on empty input.
bool is_lyndon(const Word& w);

struct LyndonFactor {
  Word word;
  int exponent;
  bool operator==(const LyndonFactor&) const = default;
};

/// Chen–Fox–Lyndon factorization by Duval's algorithm: strictly decreasing
/// Lyndon factors with multiplicities whose concatenation is w.
std::vector<LyndonFactor> cfl_factorize(const Word& w);

/// Multiplicative sign: each Lyndon factor contributes +1 when its length is
/// odd and -1 when even, raised to its multiplicity.
int epsilon_sign(const Word& w);

/// Word-sum cap: refuses (WordCountTooLarge) rather than truncating.
inline constexpr std::uint64_t kDefaultWordCap = 1'000'000;

/// Generic alphabet-indexed word expansion
///   Lambda_i(r_1 + ... + r_n) = sum over words w of length i of
///   eps(w) * Lambda_{l_q}(w_q) ... Lambda_{l_1}(w_1)
/// where w = w_1^{l_1} ... w_q^{l_q} is the Lyndon factorization with
/// w_1 > ... > w_q.  A provider supplies the ring ops and the per-word
/// Lambda values:
///   using Value = ...;
///   int letters() const;
///   Value zero() const;  Value one() const;
///   Value lambda_word(const Word& factor, int multiplicity) const;
template <class Provider>
typename Provider::Value amitsur_lambda(const Provider& p, int i,
                                        std::uint64_t cap = kDefaultWordCap) {
  using Value = typename Provider::Value;
  int n = p.letters();
  if (i < 0) fail("InvalidInput", "negative homogeneity degree");
  if (i == 0) return p.one();
  if (n == 0) return p.zero();
  std::uint64_t count = 1;
  for (int k = 0; k < i; ++k) {
    count *= static_cast<std::uint64_t>(n);
    if (count > cap) fail("WordCountTooLarge", "n^i exceeds the word cap");
  }
  Value acc = p.zero();
  Word w(i, 0);
  while (true) {
    Value term = p.one();
    bool first = true;
    auto factors = cfl_factorize(w);
    // increasing order: last factor first
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      Value v = p.lambda_word(it->word, it->exponent);
      term = first ? std::move(v) : term * v;
      first = false;
    }
    if (epsilon_sign(w) < 0) term = term.neg();
    acc = acc + term;
    int pos = i - 1;
    while (pos >= 0 && w[pos] == n - 1) w[pos--] = 0;
    if (pos < 0) break;
    ++w[pos];
  }
  return acc;
}

/// Provider over raw square matrices: words multiply matrices,
/// Lambda through the division-free characteristic polynomial.
struct MatrixWordProvider {
  using Value = RingElem;
  std::vector<Matrix> elements;

  int letters() const { return static_cast<int>(elements.size()); }
  Value zero() const { return RingElem::zero(elements.at(0).context()); }
  Value one() const { return RingElem::one(elements.at(0).context()); }
  Value lambda_word(const Word& factor, int multiplicity) const;
};

/// Provider over monoid-algebra elements under a DeterminantLaw.
struct LawWordProvider {
  using Value = RingElem;
  const DeterminantLaw* law;
  std::vector<AlgebraElem> elements;

  int letters() const { return static_cast<int>(elements.size()); }
  Value zero() const;
  Value one() const;
  Value lambda_word(const Word& factor, int multiplicity) const;
};

/// Lambda_i(r_1 + ... + r_n) for matrices via Amitsur's expansion.
RingElem amitsur_lambda_matrices(const std::vector<Matrix>& elements, int i,
                                 std::uint64_t cap = kDefaultWordCap);

/// Lambda_i(x_1 + ... + x_n) for algebra elements under `law`.
RingElem amitsur_lambda_law(const DeterminantLaw& law, const std::vector<AlgebraElem>& elements,
                            int i, std::uint64_t cap = kDefaultWordCap);

/// Compares the word expansion against the characteristic coefficients of the
/// summed matrix for all i <= d, n <= n_max, on `trials` random integer
/// matrix tuples (entries in [-9, 9]).
Report amitsur_consistency_suite(int d, int n_max, int trials, std::uint64_t seed,
                                 const RingContextPtr& ctx);

}  // namespace detlab

#endif  // DETLAB_LYNDON_HPP
