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

#include "detlab/group_algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace detlab {

FiniteMonoidTable::FiniteMonoidTable(std::vector<std::vector<int>> table, int identity,
                                     std::vector<std::string> labels)
    : table_(std::move(table)), identity_(identity), labels_(std::move(labels)) {
  int m = size();
  if (m == 0) fail("InvalidTable", "empty multiplication table");
  if (identity_ < 0 || identity_ >= m) fail("InvalidTable", "identity index out of range");
  for (int x = 0; x < m; ++x) {
    if (static_cast<int>(table_[x].size()) != m) fail("InvalidTable", "table is not square");
    for (int y = 0; y < m; ++y)
      if (table_[x][y] < 0 || table_[x][y] >= m)
        fail("InvalidTable", "entry (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
  }
  for (int x = 0; x < m; ++x) {
    if (table_[identity_][x] != x || table_[x][identity_] != x)
      fail("InvalidTable", "identity axiom fails at element " + std::to_string(x));
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]])
          fail("NotAssociative", "associativity fails at triple (" + std::to_string(x) + "," +
                                     std::to_string(y) + "," + std::to_string(z) + ")");
  if (labels_.empty()) {
    labels_.reserve(m);
    for (int x = 0; x < m; ++x) labels_.push_back("g" + std::to_string(x));
  } else if (static_cast<int>(labels_.size()) != m) {
    fail("InvalidTable", "label count does not match size");
  }
  // derive inverses when present
  std::vector<int> inv(m, -1);
  bool group = true;
  for (int x = 0; x < m && group; ++x) {
    for (int y = 0; y < m; ++y) {
      if (table_[x][y] == identity_ && table_[y][x] == identity_) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] < 0) group = false;
  }
  if (group) inverses_ = std::move(inv);
}

int FiniteMonoidTable::inverse(int x) const {
  if (!inverses_) fail("NoInverses", "monoid is not a group");
  return (*inverses_)[x];
}

int FiniteMonoidTable::product_of_word(const std::vector<int>& word) const {
  int acc = identity_;
  for (int g : word) {
    if (g < 0 || g >= size()) fail("IndexOutOfRange", "word letter " + std::to_string(g));
    acc = table_[acc][g];
  }
  return acc;
}

namespace {
std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  // (f then-after g)(i) = f(g(i))
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}
}  // namespace

PermutationClosure monoid_from_permutations(const std::vector<std::vector<int>>& generators,
                                            int cap) {
  std::size_t k = generators.empty() ? 1 : generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != k) fail("NotABijection", "generators act on different ground sets");
    std::vector<bool> hit(k, false);
    for (int v : g) {
      if (v < 0 || v >= static_cast<int>(k) || hit[v])
        fail("NotABijection", "generator is not a bijection");
      hit[v] = true;
    }
  }
  std::vector<int> id(k);
  for (std::size_t i = 0; i < k; ++i) id[i] = static_cast<int>(i);

  std::vector<std::vector<int>> elements = {id};
  std::map<std::vector<int>, int> index = {{id, 0}};
  std::vector<std::pair<int, int>> parents = {{-1, -1}};
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      std::vector<int> y = compose_perm(elements[x], generators[gi]);
      if (index.count(y)) continue;
      if (static_cast<int>(elements.size()) >= cap)
        fail("ClosureTooLarge", "closure exceeds cap " + std::to_string(cap));
      int yi = static_cast<int>(elements.size());
      index[y] = yi;
      elements.push_back(std::move(y));
      parents.push_back({x, static_cast<int>(gi)});
      queue.push_back(yi);
    }
  }
  int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) table[x][y] = index.at(compose_perm(elements[x], elements[y]));

  PermutationClosure out;
  out.table = std::make_shared<FiniteMonoidTable>(std::move(table), 0);
  for (const auto& e : elements) out.elements.push_back(Permutation{e});
  out.parents = std::move(parents);
  return out;
}

AlgebraElem::AlgebraElem(RingContextPtr ctx, std::map<int, RingElem> terms)
    : ctx_(std::move(ctx)) {
  for (auto& [g, c] : terms) {
    if (!same_context(c.context(), ctx_)) fail("ContextMismatch", "coefficient context differs");
    if (!c.is_zero()) terms_.emplace(g, std::move(c));
  }
}

RingElem AlgebraElem::coeff(int g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? RingElem::zero(ctx_) : it->second;
}

AlgebraElem AlgebraElem::operator+(const AlgebraElem& rhs) const {
  if (!same_context(ctx_, rhs.ctx_)) fail("ContextMismatch", "adding over different contexts");
  std::map<int, RingElem> out = terms_;
  for (const auto& [g, c] : rhs.terms_) {
    auto it = out.find(g);
    if (it == out.end()) {
      out.emplace(g, c);
    } else {
      RingElem s = it->second + c;
      if (s.is_zero())
        out.erase(it);
      else
        it->second = std::move(s);
    }
  }
  AlgebraElem result(ctx_);
  result.terms_ = std::move(out);
  return result;
}

AlgebraElem AlgebraElem::neg() const {
  AlgebraElem result(ctx_);
  for (const auto& [g, c] : terms_) result.terms_.emplace(g, c.neg());
  return result;
}

AlgebraElem AlgebraElem::operator-(const AlgebraElem& rhs) const { return *this + rhs.neg(); }

AlgebraElem AlgebraElem::scaled(const RingElem& c) const {
  if (!same_context(ctx_, c.context())) fail("ContextMismatch", "scalar context differs");
  AlgebraElem result(ctx_);
  if (c.is_zero()) return result;
  for (const auto& [g, coeff] : terms_) {
    RingElem v = coeff * c;
    if (!v.is_zero()) result.terms_.emplace(g, std::move(v));
  }
  return result;
}

bool AlgebraElem::operator==(const AlgebraElem& rhs) const {
  if (!same_context(ctx_, rhs.ctx_)) fail("ContextMismatch", "comparing over different contexts");
  if (terms_.size() != rhs.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = rhs.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

std::string AlgebraElem::str(const FiniteMonoidTable& table) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << table.label(g);
  }
  return os.str();
}

AlgebraElem delta(const FiniteMonoidTable& table, int g, const RingContextPtr& ctx) {
  if (g < 0 || g >= table.size()) fail("IndexOutOfRange", "element index " + std::to_string(g));
  std::map<int, RingElem> terms;
  terms.emplace(g, RingElem::one(ctx));
  return AlgebraElem(ctx, std::move(terms));
}

AlgebraElem algebra_mul(const AlgebraElem& a, const AlgebraElem& b, const FiniteMonoidTable& table) {
  if (!same_context(a.context(), b.context()))
    fail("ContextMismatch", "multiplying over different contexts");
  std::map<int, RingElem> out;
  for (const auto& [x, cx] : a.terms()) {
    if (x >= table.size()) fail("IndexOutOfRange", "element index " + std::to_string(x));
    for (const auto& [y, cy] : b.terms()) {
      if (y >= table.size()) fail("IndexOutOfRange", "element index " + std::to_string(y));
      int z = table.mul(x, y);
      RingElem c = cx * cy;
      auto it = out.find(z);
      if (it == out.end())
        out.emplace(z, std::move(c));
      else
        it->second = it->second + c;
    }
  }
  return AlgebraElem(a.context(), std::move(out));
}

AlgebraElem algebra_pow(const AlgebraElem& a, unsigned e, const FiniteMonoidTable& table) {
  AlgebraElem acc = delta(table, table.identity(), a.context());
  for (unsigned i = 0; i < e; ++i) acc = algebra_mul(acc, a, table);
  return acc;
}

RingElem augmentation(const AlgebraElem& a) {
  RingElem s = RingElem::zero(a.context());
  for (const auto& [g, c] : a.terms()) s = s + c;
  return s;
}

AlgebraElem embed_elem(const AlgebraElem& a, const RingContextPtr& target) {
  std::map<int, RingElem> out;
  for (const auto& [g, c] : a.terms()) out.emplace(g, embed(c, target));
  return AlgebraElem(target, std::move(out));
}

GenericElement generic_element(const std::vector<int>& elements, const FiniteMonoidTable& table,
                               const RingContextPtr& base, const std::string& prefix) {
  if (elements.empty()) fail("InvalidInput", "generic_element needs a nonempty element list");
  auto [ctx, vars] = extend_with_vars(base, static_cast<int>(elements.size()), prefix);
  std::map<int, RingElem> terms;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    int g = elements[i];
    if (g < 0 || g >= table.size()) fail("IndexOutOfRange", "element index " + std::to_string(g));
    RingElem t = RingElem::variable(ctx, vars[i]);
    auto it = terms.find(g);
    if (it == terms.end())
      terms.emplace(g, std::move(t));
    else
      it->second = it->second + t;
  }
  GenericElement out{AlgebraElem(ctx, std::move(terms)), ctx, vars};
  return out;
}

}  // namespace detlab
