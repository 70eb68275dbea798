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

#include "detlab/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "detlab/error.hpp"

namespace detlab {

int worker_count() {
  const char* env = std::getenv("DETLAB_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  if (n < 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw > 0 && n > static_cast<int>(hw)) n = static_cast<int>(hw);
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int workers = worker_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.map.resize(n);
  std::iota(p.map.begin(), p.map.end(), 0);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= n || to < 0 || to >= n) fail("IndexOutOfRange", "cycle entry out of range");
      p.map[from] = to;
    }
  }
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  int n = degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int i = start;
    while (!seen[i]) {
      seen[i] = true;
      cycle.push_back(i);
      i = map[i];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::sign() const {
  int s = 1;
  for (const auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) fail("DegreeMismatch", "composing permutations of different degree");
  Permutation out;
  out.map.resize(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) out.map[i] = map[other.map[i]];
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.map.begin(), p.map.end()));
  return out;
}

}  // namespace detlab
