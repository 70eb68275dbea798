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

#ifndef DETLAB_UTIL_HPP
#define DETLAB_UTIL_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace detlab {

/// Worker count for parallel sweeps.  Controlled by DETLAB_THREADS; defaults
/// to 1 so plain runs are strictly sequential.
int worker_count();

/// Runs fn(0..n-1).  Each index writes only its own slot in caller-owned
/// storage, and callers reduce in index order, so results are byte-identical
/// for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Deterministic RNG used by every fuzz harness.  Per-trial streams are
/// derived from the root seed by index so trials can be partitioned.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  long long range(long long lo, long long hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    return dist(engine_);
  }

  static Rng derive(std::uint64_t root_seed, std::uint64_t index) {
    // splitmix-style decorrelation of per-trial streams
    std::uint64_t z = root_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 engine_;
};

/// Permutations in one-line notation, 0-based: map[i] is the image of i.
struct Permutation {
  std::vector<int> map;

  int degree() const { return static_cast<int>(map.size()); }
  int operator()(int i) const { return map[i]; }

  static Permutation identity(int n);
  /// Builds a permutation of degree n from disjoint cycles (0-based entries).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  /// Cycle decomposition; every cycle starts at its minimal element and the
  /// cycles are ordered by that minimum.  Fixed points appear as 1-cycles.
  std::vector<std::vector<int>> cycles() const;

  int sign() const;
  Permutation compose(const Permutation& other) const;  // this ∘ other
  bool operator==(const Permutation&) const = default;
};

/// All n! permutations of degree n in lexicographic order of one-line maps.
std::vector<Permutation> all_permutations(int n);

/// Memoized enumeration with cycle decompositions and signs precomputed;
/// shared by the exhaustive tuple sweeps.
struct PermutationTable {
  std::vector<Permutation> perms;
  std::vector<std::vector<std::vector<int>>> cycles;
  std::vector<int> signs;
};
const PermutationTable& permutation_table(int n);

}  // namespace detlab

#endif  // DETLAB_UTIL_HPP
