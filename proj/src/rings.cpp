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

#include "detlab/rings.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace detlab {

namespace {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  return boost::multiprecision::miller_rabin_test(p, 32);
}

}  // namespace

// ---- RingContext ------------------------------------------------------------

RingContextPtr RingContext::integers() {
  auto c = std::make_shared<RingContext>();
  c->kind = RingKind::Integers;
  return c;
}

RingContextPtr RingContext::rationals() {
  auto c = std::make_shared<RingContext>();
  c->kind = RingKind::Rationals;
  return c;
}

RingContextPtr RingContext::integers_mod(const Int& n) {
  if (n < 2) fail("InvalidModulus", "IntegersMod modulus must be >= 2, got " + n.str());
  auto c = std::make_shared<RingContext>();
  c->kind = RingKind::IntegersMod;
  c->modulus = n;
  return c;
}

RingContextPtr RingContext::prime_field(const Int& p) {
  if (!is_prime(p)) fail("NotPrime", "PrimeField characteristic must be prime, got " + p.str());
  auto c = std::make_shared<RingContext>();
  c->kind = RingKind::PrimeField;
  c->modulus = p;
  return c;
}

RingContextPtr RingContext::polynomial(RingContextPtr base, std::vector<std::string> vars) {
  if (vars.empty()) return base;
  std::vector<std::string> merged;
  RingContextPtr inner = std::move(base);
  if (inner->kind == RingKind::Polynomial) {
    merged = inner->vars;
    inner = inner->base;
  }
  merged.insert(merged.end(), vars.begin(), vars.end());
  std::set<std::string> seen;
  for (const auto& v : merged) {
    if (v.empty()) fail("InvalidVariable", "empty variable name");
    if (!seen.insert(v).second) fail("DuplicateVariable", "variable repeated: " + v);
  }
  auto c = std::make_shared<RingContext>();
  c->kind = RingKind::Polynomial;
  c->base = std::move(inner);
  c->vars = std::move(merged);
  return c;
}

RingContextPtr RingContext::dual(RingContextPtr base) {
  auto c = std::make_shared<RingContext>();
  c->kind = RingKind::DualNumbers;
  c->base = std::move(base);
  return c;
}

Int RingContext::characteristic() const {
  switch (kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return 0;
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return modulus;
    default:
      return base->characteristic();
  }
}

int RingContext::var_index(const std::string& name) const {
  if (kind != RingKind::Polynomial) return -1;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

std::string RingContext::describe() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Z/" + modulus.str();
    case RingKind::PrimeField: return "F" + modulus.str();
    case RingKind::DualNumbers: return base->describe() + "[eps]";
    case RingKind::Polynomial: {
      std::string s = base->describe() + "[";
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
      }
      return s + "]";
    }
  }
  return "?";
}

bool same_context(const RingContextPtr& a, const RingContextPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return true;
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return a->modulus == b->modulus;
    case RingKind::DualNumbers:
      return same_context(a->base, b->base);
    case RingKind::Polynomial:
      return a->vars == b->vars && same_context(a->base, b->base);
  }
  return false;
}

bool extends_context(const RingContextPtr& big, const RingContextPtr& small) {
  if (same_context(big, small)) return true;
  if (big->kind == RingKind::Polynomial) {
    if (small->kind == RingKind::Polynomial) {
      bool subset = true;
      for (const auto& v : small->vars)
        if (big->var_index(v) < 0) { subset = false; break; }
      if (subset && extends_context(big->base, small->base)) return true;
    }
    return extends_context(big->base, small);
  }
  if (big->kind == RingKind::DualNumbers) {
    if (small->kind == RingKind::DualNumbers && extends_context(big->base, small->base)) return true;
    return extends_context(big->base, small);
  }
  return false;
}

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::var(int index, int exp) {
  Monomial m;
  if (exp > 0) m.factors.push_back({index, exp});
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors) d += e;
  return d;
}

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : factors)
    if (v == var) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < factors.size() || j < other.factors.size()) {
    if (j == other.factors.size() || (i < factors.size() && factors[i].first < other.factors[j].first)) {
      out.factors.push_back(factors[i++]);
    } else if (i == factors.size() || other.factors[j].first < factors[i].first) {
      out.factors.push_back(other.factors[j++]);
    } else {
      out.factors.push_back({factors[i].first, factors[i].second + other.factors[j].second});
      ++i;
      ++j;
    }
  }
  return out;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // lexicographic on the dense exponent vector, earlier variables first
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    const auto& [va, ea] = a.factors[i];
    const auto& [vb, eb] = b.factors[j];
    if (va != vb) {
      // the one with the smaller variable index has a positive exponent where
      // the other has zero: it is lexicographically larger
      return vb < va;
    }
    if (ea != eb) return ea < eb;
    ++i;
    ++j;
  }
  if (i < a.factors.size()) return false;  // a has extra later-variable factors => larger
  if (j < b.factors.size()) return true;
  return false;
}

// ---- RingElem construction --------------------------------------------------

Int RingElem::normalize_residue(const Int& v, const Int& n) {
  Int r = v % n;
  if (r < 0) r += n;
  return r;
}

RingElem RingElem::zero(const RingContextPtr& ctx) { return from_int(ctx, Int(0)); }

RingElem RingElem::one(const RingContextPtr& ctx) { return from_int(ctx, Int(1)); }

RingElem RingElem::from_int(const RingContextPtr& ctx, const Int& n) {
  switch (ctx->kind) {
    case RingKind::Integers:
      return RingElem(ctx, Payload(n));
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(ctx, Payload(normalize_residue(n, ctx->modulus)));
    case RingKind::Rationals:
      return RingElem(ctx, Payload(Rat(n)));
    case RingKind::Polynomial: {
      detail::PolyData pd;
      RingElem c = from_int(ctx->base, n);
      if (!c.is_zero()) pd.terms.push_back({Monomial::one(), c});
      return RingElem(ctx, Payload(std::move(pd)));
    }
    case RingKind::DualNumbers: {
      detail::DualData dd;
      dd.parts = {from_int(ctx->base, n), zero(ctx->base)};
      return RingElem(ctx, Payload(std::move(dd)));
    }
  }
  fail("Internal", "unreachable");
}

RingElem RingElem::from_rat(const RingContextPtr& ctx, const Rat& q) {
  switch (ctx->kind) {
    case RingKind::Rationals:
      return RingElem(ctx, Payload(q));
    case RingKind::Polynomial: {
      detail::PolyData pd;
      RingElem c = from_rat(ctx->base, q);
      if (!c.is_zero()) pd.terms.push_back({Monomial::one(), c});
      return RingElem(ctx, Payload(std::move(pd)));
    }
    case RingKind::DualNumbers: {
      detail::DualData dd;
      dd.parts = {from_rat(ctx->base, q), zero(ctx->base)};
      return RingElem(ctx, Payload(std::move(dd)));
    }
    default:
      if (boost::multiprecision::denominator(q) == 1)
        return from_int(ctx, boost::multiprecision::numerator(q));
      fail("NotRational", "cannot place fraction " + q.str() + " in " + ctx->describe());
  }
}

RingElem RingElem::variable(const RingContextPtr& ctx, int var_index) {
  if (ctx->kind != RingKind::Polynomial || var_index < 0 ||
      var_index >= static_cast<int>(ctx->vars.size()))
    fail("UnknownVariable", "no variable with index " + std::to_string(var_index));
  detail::PolyData pd;
  pd.terms.push_back({Monomial::var(var_index), one(ctx->base)});
  return RingElem(ctx, Payload(std::move(pd)));
}

RingElem RingElem::variable(const RingContextPtr& ctx, const std::string& name) {
  int idx = ctx->var_index(name);
  if (idx < 0) fail("UnknownVariable", "no variable named " + name + " in " + ctx->describe());
  return variable(ctx, idx);
}

RingElem RingElem::epsilon(const RingContextPtr& ctx) {
  if (ctx->kind == RingKind::DualNumbers) {
    detail::DualData dd;
    dd.parts = {zero(ctx->base), one(ctx->base)};
    return RingElem(ctx, Payload(std::move(dd)));
  }
  if (ctx->kind == RingKind::Polynomial) {
    detail::PolyData pd;
    RingElem e = epsilon(ctx->base);
    pd.terms.push_back({Monomial::one(), std::move(e)});
    return RingElem(ctx, Payload(std::move(pd)));
  }
  fail("NoDualPart", "context " + ctx->describe() + " has no dual-number layer");
}

RingElem RingElem::make_poly(const RingContextPtr& ctx,
                             std::vector<std::pair<Monomial, RingElem>> terms) {
  if (ctx->kind != RingKind::Polynomial) fail("ContextMismatch", "make_poly needs a Polynomial context");
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
  detail::PolyData pd;
  for (auto& [m, c] : terms) {
    if (!same_context(c.context(), ctx->base)) fail("ContextMismatch", "coefficient outside base context");
    if (c.is_zero()) continue;
    if (!pd.terms.empty() && pd.terms.back().first == m) {
      RingElem merged = pd.terms.back().second + c;
      if (merged.is_zero())
        pd.terms.pop_back();
      else
        pd.terms.back().second = std::move(merged);
    } else {
      pd.terms.push_back({std::move(m), std::move(c)});
    }
  }
  return RingElem(ctx, Payload(std::move(pd)));
}

RingElem RingElem::make_dual(const RingContextPtr& ctx, RingElem constant, RingElem eps) {
  if (ctx->kind != RingKind::DualNumbers) fail("ContextMismatch", "make_dual needs a DualNumbers context");
  if (!same_context(constant.context(), ctx->base) || !same_context(eps.context(), ctx->base))
    fail("ContextMismatch", "dual parts outside base context");
  detail::DualData dd;
  dd.parts = {std::move(constant), std::move(eps)};
  return RingElem(ctx, Payload(std::move(dd)));
}

// ---- predicates -------------------------------------------------------------

bool RingElem::is_zero() const {
  switch (ctx_->kind) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return std::get<Int>(payload_) == 0;
    case RingKind::Rationals:
      return std::get<Rat>(payload_) == 0;
    case RingKind::Polynomial:
      return std::get<detail::PolyData>(payload_).terms.empty();
    case RingKind::DualNumbers: {
      const auto& p = std::get<detail::DualData>(payload_).parts;
      return p[0].is_zero() && p[1].is_zero();
    }
  }
  return false;
}

bool RingElem::is_one() const {
  switch (ctx_->kind) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return std::get<Int>(payload_) == 1;  // moduli are >= 2, so 1 is canonical
    case RingKind::Rationals:
      return std::get<Rat>(payload_) == 1;
    case RingKind::Polynomial: {
      const auto& t = std::get<detail::PolyData>(payload_).terms;
      return t.size() == 1 && t[0].first == Monomial::one() && t[0].second.is_one();
    }
    case RingKind::DualNumbers: {
      const auto& p = std::get<detail::DualData>(payload_).parts;
      return p[0].is_one() && p[1].is_zero();
    }
  }
  return false;
}

bool RingElem::is_unit() const {
  switch (ctx_->kind) {
    case RingKind::Integers: {
      const Int& v = std::get<Int>(payload_);
      return v == 1 || v == -1;
    }
    case RingKind::Rationals:
      return std::get<Rat>(payload_) != 0;
    case RingKind::PrimeField:
      return std::get<Int>(payload_) != 0;
    case RingKind::IntegersMod:
      return boost::multiprecision::gcd(std::get<Int>(payload_), ctx_->modulus) == 1;
    case RingKind::Polynomial: {
      const auto& t = std::get<detail::PolyData>(payload_).terms;
      // constant units only; sufficient for every series/lambda use here
      return t.size() == 1 && t[0].first == Monomial::one() && t[0].second.is_unit();
    }
    case RingKind::DualNumbers:
      return std::get<detail::DualData>(payload_).parts[0].is_unit();
  }
  return false;
}

// ---- arithmetic -------------------------------------------------------------

namespace {
void require_same_context(const RingElem& a, const RingElem& b) {
  if (!same_context(a.context(), b.context()))
    fail("ContextMismatch", a.context()->describe() + " vs " + b.context()->describe());
}
}  // namespace

RingElem RingElem::operator+(const RingElem& rhs) const {
  require_same_context(*this, rhs);
  switch (ctx_->kind) {
    case RingKind::Integers:
      return RingElem(ctx_, Payload(Int(std::get<Int>(payload_) + std::get<Int>(rhs.payload_))));
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(ctx_, Payload(normalize_residue(
                                std::get<Int>(payload_) + std::get<Int>(rhs.payload_), ctx_->modulus)));
    case RingKind::Rationals:
      return RingElem(ctx_, Payload(std::get<Rat>(payload_) + std::get<Rat>(rhs.payload_)));
    case RingKind::Polynomial: {
      const auto& ta = std::get<detail::PolyData>(payload_).terms;
      const auto& tb = std::get<detail::PolyData>(rhs.payload_).terms;
      detail::PolyData out;
      std::size_t i = 0, j = 0;
      while (i < ta.size() || j < tb.size()) {
        bool take_a = j == tb.size() ||
                      (i < ta.size() && graded_lex_less(ta[i].first, tb[j].first));
        bool take_b = i == ta.size() ||
                      (j < tb.size() && graded_lex_less(tb[j].first, ta[i].first));
        if (take_a) {
          out.terms.push_back(ta[i++]);
        } else if (take_b) {
          out.terms.push_back(tb[j++]);
        } else {
          RingElem c = ta[i].second + tb[j].second;
          if (!c.is_zero()) out.terms.push_back({ta[i].first, std::move(c)});
          ++i;
          ++j;
        }
      }
      return RingElem(ctx_, Payload(std::move(out)));
    }
    case RingKind::DualNumbers: {
      const auto& pa = std::get<detail::DualData>(payload_).parts;
      const auto& pb = std::get<detail::DualData>(rhs.payload_).parts;
      detail::DualData out;
      out.parts = {pa[0] + pb[0], pa[1] + pb[1]};
      return RingElem(ctx_, Payload(std::move(out)));
    }
  }
  fail("Internal", "unreachable");
}

RingElem RingElem::neg() const {
  switch (ctx_->kind) {
    case RingKind::Integers:
      return RingElem(ctx_, Payload(Int(-std::get<Int>(payload_))));
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(ctx_, Payload(normalize_residue(-std::get<Int>(payload_), ctx_->modulus)));
    case RingKind::Rationals:
      return RingElem(ctx_, Payload(Rat(-std::get<Rat>(payload_))));
    case RingKind::Polynomial: {
      detail::PolyData out = std::get<detail::PolyData>(payload_);
      for (auto& [m, c] : out.terms) c = c.neg();
      return RingElem(ctx_, Payload(std::move(out)));
    }
    case RingKind::DualNumbers: {
      const auto& p = std::get<detail::DualData>(payload_).parts;
      detail::DualData out;
      out.parts = {p[0].neg(), p[1].neg()};
      return RingElem(ctx_, Payload(std::move(out)));
    }
  }
  fail("Internal", "unreachable");
}

RingElem RingElem::operator-(const RingElem& rhs) const { return *this + rhs.neg(); }

RingElem RingElem::operator*(const RingElem& rhs) const {
  require_same_context(*this, rhs);
  switch (ctx_->kind) {
    case RingKind::Integers:
      return RingElem(ctx_, Payload(Int(std::get<Int>(payload_) * std::get<Int>(rhs.payload_))));
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(ctx_, Payload(normalize_residue(
                                std::get<Int>(payload_) * std::get<Int>(rhs.payload_), ctx_->modulus)));
    case RingKind::Rationals:
      return RingElem(ctx_, Payload(Rat(std::get<Rat>(payload_) * std::get<Rat>(rhs.payload_))));
    case RingKind::Polynomial: {
      const auto& ta = std::get<detail::PolyData>(payload_).terms;
      const auto& tb = std::get<detail::PolyData>(rhs.payload_).terms;
      std::vector<std::pair<Monomial, RingElem>> products;
      products.reserve(ta.size() * tb.size());
      for (const auto& [ma, ca] : ta)
        for (const auto& [mb, cb] : tb) {
          RingElem c = ca * cb;
          if (!c.is_zero()) products.push_back({ma.times(mb), std::move(c)});
        }
      return make_poly(ctx_, std::move(products));
    }
    case RingKind::DualNumbers: {
      const auto& pa = std::get<detail::DualData>(payload_).parts;
      const auto& pb = std::get<detail::DualData>(rhs.payload_).parts;
      detail::DualData out;
      out.parts = {pa[0] * pb[0], pa[0] * pb[1] + pa[1] * pb[0]};  // eps^2 = 0
      return RingElem(ctx_, Payload(std::move(out)));
    }
  }
  fail("Internal", "unreachable");
}

RingElem RingElem::pow(unsigned long long e) const {
  RingElem acc = one(ctx_);
  RingElem base = *this;
  while (e > 0) {
    if (e & 1ULL) acc = acc * base;
    base = e > 1 ? base * base : base;
    e >>= 1ULL;
  }
  return acc;
}

namespace {
Int mod_inverse(const Int& a, const Int& n) {
  Int old_r = a % n, r = n;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; }
  if (old_r != 1) fail("NotAUnit", "no inverse modulo " + n.str());
  Int result = old_s % n;
  if (result < 0) result += n;
  return result;
}
}  // namespace

RingElem RingElem::inv() const {
  if (!is_unit()) fail("NotAUnit", str() + " is not a unit in " + ctx_->describe());
  switch (ctx_->kind) {
    case RingKind::Integers:
      return *this;  // units are +-1, self-inverse
    case RingKind::Rationals:
      return RingElem(ctx_, Payload(Rat(1 / std::get<Rat>(payload_))));
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(ctx_, Payload(mod_inverse(std::get<Int>(payload_), ctx_->modulus)));
    case RingKind::Polynomial: {
      const auto& t = std::get<detail::PolyData>(payload_).terms;
      detail::PolyData out;
      out.terms.push_back({Monomial::one(), t[0].second.inv()});
      return RingElem(ctx_, Payload(std::move(out)));
    }
    case RingKind::DualNumbers: {
      const auto& p = std::get<detail::DualData>(payload_).parts;
      RingElem ia = p[0].inv();
      detail::DualData out;
      out.parts = {ia, (ia * ia * p[1]).neg()};  // (a+be)^-1 = a^-1 - a^-2 b e
      return RingElem(ctx_, Payload(std::move(out)));
    }
  }
  fail("Internal", "unreachable");
}

bool RingElem::operator==(const RingElem& rhs) const {
  require_same_context(*this, rhs);
  switch (ctx_->kind) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return std::get<Int>(payload_) == std::get<Int>(rhs.payload_);
    case RingKind::Rationals:
      return std::get<Rat>(payload_) == std::get<Rat>(rhs.payload_);
    case RingKind::Polynomial: {
      const auto& ta = std::get<detail::PolyData>(payload_).terms;
      const auto& tb = std::get<detail::PolyData>(rhs.payload_).terms;
      if (ta.size() != tb.size()) return false;
      for (std::size_t i = 0; i < ta.size(); ++i)
        if (!(ta[i].first == tb[i].first) || !(ta[i].second == tb[i].second)) return false;
      return true;
    }
    case RingKind::DualNumbers: {
      const auto& pa = std::get<detail::DualData>(payload_).parts;
      const auto& pb = std::get<detail::DualData>(rhs.payload_).parts;
      return pa[0] == pb[0] && pa[1] == pb[1];
    }
  }
  return false;
}

// ---- structure access -------------------------------------------------------

const Int& RingElem::int_value() const {
  if (!std::holds_alternative<Int>(payload_)) fail("ContextMismatch", "not an integer payload");
  return std::get<Int>(payload_);
}

const Rat& RingElem::rat_value() const {
  if (!std::holds_alternative<Rat>(payload_)) fail("ContextMismatch", "not a rational payload");
  return std::get<Rat>(payload_);
}

const std::vector<std::pair<Monomial, RingElem>>& RingElem::poly_terms() const {
  if (!std::holds_alternative<detail::PolyData>(payload_))
    fail("ContextMismatch", "not a polynomial payload");
  return std::get<detail::PolyData>(payload_).terms;
}

RingElem RingElem::poly_coeff(const Monomial& m) const {
  for (const auto& [mono, c] : poly_terms())
    if (mono == m) return c;
  return zero(ctx_->base);
}

RingElem RingElem::poly_coeff(const std::map<std::string, int>& exponents) const {
  if (ctx_->kind != RingKind::Polynomial) fail("ContextMismatch", "poly_coeff needs a Polynomial context");
  Monomial m;
  std::vector<std::pair<int, int>> factors;
  for (const auto& [name, e] : exponents) {
    int idx = ctx_->var_index(name);
    if (idx < 0) fail("UnknownVariable", "no variable named " + name + " in " + ctx_->describe());
    if (e > 0) factors.push_back({idx, e});
  }
  std::sort(factors.begin(), factors.end());
  m.factors = std::move(factors);
  return poly_coeff(m);
}

RingElem RingElem::coeff_in_var(int var, int k) const {
  if (ctx_->kind != RingKind::Polynomial) {
    if (k == 0) return *this;
    return zero(ctx_);
  }
  std::vector<std::pair<Monomial, RingElem>> out;
  for (const auto& [m, c] : poly_terms()) {
    if (m.exponent(var) != k) continue;
    Monomial rest;
    for (const auto& f : m.factors)
      if (f.first != var) rest.factors.push_back(f);
    out.push_back({std::move(rest), c});
  }
  return make_poly(ctx_, std::move(out));
}

int RingElem::degree_in_var(int var) const {
  int d = 0;
  for (const auto& [m, c] : poly_terms()) d = std::max(d, m.exponent(var));
  return d;
}

bool RingElem::involves_var(int var) const {
  if (ctx_->kind != RingKind::Polynomial) return false;
  for (const auto& [m, c] : poly_terms())
    if (m.exponent(var) > 0) return true;
  return false;
}

RingElem RingElem::dual_constant() const {
  if (!std::holds_alternative<detail::DualData>(payload_))
    fail("ContextMismatch", "not a dual-number payload");
  return std::get<detail::DualData>(payload_).parts[0];
}

RingElem RingElem::dual_eps() const {
  if (!std::holds_alternative<detail::DualData>(payload_))
    fail("ContextMismatch", "not a dual-number payload");
  return std::get<detail::DualData>(payload_).parts[1];
}

// ---- printing ---------------------------------------------------------------

namespace {
bool needs_parens(const RingElem& c) {
  const auto& ctx = c.context();
  if (ctx->kind == RingKind::Polynomial) return c.poly_terms().size() > 1;
  if (ctx->kind == RingKind::DualNumbers) return !c.dual_eps().is_zero();
  if (ctx->kind == RingKind::Rationals) return c.rat_value() < 0;
  if (ctx->kind == RingKind::Integers) return c.int_value() < 0;
  return false;
}
}  // namespace

std::string RingElem::str() const {
  switch (ctx_->kind) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return std::get<Int>(payload_).str();
    case RingKind::Rationals: {
      const Rat& q = std::get<Rat>(payload_);
      if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
      return boost::multiprecision::numerator(q).str() + "/" +
             boost::multiprecision::denominator(q).str();
    }
    case RingKind::Polynomial: {
      const auto& terms = poly_terms();
      if (terms.empty()) return "0";
      std::ostringstream os;
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (it != terms.rbegin()) os << " + ";
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool is_unit_coeff = c.is_one();
        if (m.factors.empty()) {
          os << cs;
        } else {
          if (!is_unit_coeff) {
            if (needs_parens(c)) os << "(" << cs << ")";
            else os << cs;
            os << "*";
          }
          bool first = true;
          for (const auto& [v, e] : m.factors) {
            if (!first) os << "*";
            first = false;
            os << ctx_->vars[v];
            if (e > 1) os << "^" << e;
          }
        }
      }
      return os.str();
    }
    case RingKind::DualNumbers: {
      const auto& p = std::get<detail::DualData>(payload_).parts;
      if (p[1].is_zero()) return p[0].str();
      std::string eps = p[1].is_one() ? "eps" : (needs_parens(p[1]) ? "(" + p[1].str() + ")*eps"
                                                                    : p[1].str() + "*eps");
      if (p[0].is_zero()) return eps;
      return p[0].str() + " + " + eps;
    }
  }
  return "?";
}

RingElem RingElem::recanonicalized() const {
  switch (ctx_->kind) {
    case RingKind::Integers:
      return from_int(ctx_, std::get<Int>(payload_));
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return from_int(ctx_, std::get<Int>(payload_));
    case RingKind::Rationals:
      return from_rat(ctx_, std::get<Rat>(payload_));
    case RingKind::Polynomial: {
      std::vector<std::pair<Monomial, RingElem>> terms;
      for (const auto& [m, c] : poly_terms()) terms.push_back({m, c.recanonicalized()});
      std::reverse(terms.begin(), terms.end());
      return make_poly(ctx_, std::move(terms));
    }
    case RingKind::DualNumbers:
      return make_dual(ctx_, dual_constant().recanonicalized(), dual_eps().recanonicalized());
  }
  fail("Internal", "unreachable");
}

// ---- embedding --------------------------------------------------------------

RingElem embed(const RingElem& value, const RingContextPtr& target) {
  const RingContextPtr& src = value.context();
  if (same_context(src, target)) return value;
  if (!extends_context(target, src))
    fail("UnsupportedExtension",
         target->describe() + " does not extend " + src->describe());
  if (target->kind == RingKind::Polynomial) {
    if (src->kind == RingKind::Polynomial) {
      // remap variables by name, embed coefficients into the target base
      std::vector<int> remap(src->vars.size());
      bool direct = extends_context(target->base, src->base);
      if (direct) {
        bool all_found = true;
        for (std::size_t i = 0; i < src->vars.size(); ++i) {
          remap[i] = target->var_index(src->vars[i]);
          if (remap[i] < 0) { all_found = false; break; }
        }
        if (all_found) {
          std::vector<std::pair<Monomial, RingElem>> terms;
          for (const auto& [m, c] : value.poly_terms()) {
            Monomial nm;
            for (const auto& [v, e] : m.factors) nm.factors.push_back({remap[v], e});
            std::sort(nm.factors.begin(), nm.factors.end());
            terms.push_back({std::move(nm), embed(c, target->base)});
          }
          return RingElem::make_poly(target, std::move(terms));
        }
      }
    }
    // constant embedding through the base
    RingElem c = embed(value, target->base);
    std::vector<std::pair<Monomial, RingElem>> terms;
    if (!c.is_zero()) terms.push_back({Monomial::one(), std::move(c)});
    return RingElem::make_poly(target, std::move(terms));
  }
  if (target->kind == RingKind::DualNumbers) {
    if (src->kind == RingKind::DualNumbers)
      return RingElem::make_dual(target, embed(value.dual_constant(), target->base),
                                 embed(value.dual_eps(), target->base));
    return RingElem::make_dual(target, embed(value, target->base),
                               RingElem::zero(target->base));
  }
  fail("UnsupportedExtension", "cannot embed into " + target->describe());
}

RingElem restrict_context(const RingElem& value, const RingContextPtr& target) {
  const RingContextPtr& src = value.context();
  if (same_context(src, target)) return value;
  if (!extends_context(src, target))
    fail("UnsupportedExtension", src->describe() + " does not extend " + target->describe());
  if (src->kind == RingKind::Polynomial) {
    if (target->kind == RingKind::Polynomial && extends_context(src->base, target->base)) {
      std::vector<std::pair<Monomial, RingElem>> terms;
      bool representable = true;
      for (const auto& [m, c] : value.poly_terms()) {
        Monomial nm;
        for (const auto& [v, e] : m.factors) {
          int idx = target->var_index(src->vars[v]);
          if (idx < 0) { representable = false; break; }
          nm.factors.push_back({idx, e});
        }
        if (!representable) break;
        std::sort(nm.factors.begin(), nm.factors.end());
        terms.push_back({std::move(nm), restrict_context(c, target->base)});
      }
      if (representable) return RingElem::make_poly(target, std::move(terms));
      fail("NotInSubring", value.str() + " involves variables outside " + target->describe());
    }
    // target sits under the polynomial layer: value must be constant
    const auto& terms = value.poly_terms();
    if (terms.empty()) return RingElem::zero(target);
    if (terms.size() == 1 && terms[0].first == Monomial::one())
      return restrict_context(terms[0].second, target);
    fail("NotInSubring", value.str() + " is not constant over " + target->describe());
  }
  if (src->kind == RingKind::DualNumbers) {
    if (target->kind == RingKind::DualNumbers)
      return RingElem::make_dual(target, restrict_context(value.dual_constant(), target->base),
                                 restrict_context(value.dual_eps(), target->base));
    if (!value.dual_eps().is_zero())
      fail("NotInSubring", value.str() + " has a nonzero eps part");
    return restrict_context(value.dual_constant(), target);
  }
  fail("UnsupportedExtension", "cannot restrict " + src->describe());
}

std::pair<RingContextPtr, std::vector<int>> extend_with_vars(const RingContextPtr& ctx, int n,
                                                             const std::string& prefix) {
  std::vector<std::string> existing;
  if (ctx->kind == RingKind::Polynomial) existing = ctx->vars;
  std::vector<std::string> fresh;
  int counter = 1;
  while (static_cast<int>(fresh.size()) < n) {
    std::string name = prefix + std::to_string(counter++);
    bool taken = std::find(existing.begin(), existing.end(), name) != existing.end();
    if (!taken) fresh.push_back(name);
  }
  RingContextPtr ext = RingContext::polynomial(ctx, fresh);
  std::vector<int> indices;
  for (const auto& name : fresh) indices.push_back(ext->var_index(name));
  return {ext, indices};
}

// ---- truncated power series -------------------------------------------------

RingElem series_derivative(const RingElem& p, int var) {
  const RingContextPtr& ctx = p.context();
  if (ctx->kind != RingKind::Polynomial) fail("ContextMismatch", "derivative needs a Polynomial context");
  std::vector<std::pair<Monomial, RingElem>> out;
  for (const auto& [m, c] : p.poly_terms()) {
    int e = m.exponent(var);
    if (e == 0) continue;
    Monomial nm;
    for (const auto& f : m.factors) {
      if (f.first == var) {
        if (f.second > 1) nm.factors.push_back({f.first, f.second - 1});
      } else {
        nm.factors.push_back(f);
      }
    }
    out.push_back({std::move(nm), c * RingElem::from_int(ctx->base, e)});
  }
  return RingElem::make_poly(ctx, std::move(out));
}

RingElem series_truncate(const RingElem& p, int var, int order) {
  std::vector<std::pair<Monomial, RingElem>> out;
  for (const auto& [m, c] : p.poly_terms())
    if (m.exponent(var) <= order) out.push_back({m, c});
  return RingElem::make_poly(p.context(), std::move(out));
}

RingElem series_truncated_inverse(const RingElem& p, int var, int order) {
  const RingContextPtr& ctx = p.context();
  if (ctx->kind != RingKind::Polynomial) fail("ContextMismatch", "series inverse needs a Polynomial context");
  RingElem c0 = p.coeff_in_var(var, 0);
  if (!c0.is_unit()) fail("NonUnitConstantTerm", "constant term " + c0.str() + " is not a unit");
  RingElem c0inv = c0.inv();
  RingElem t = RingElem::variable(ctx, var);
  // q_k = -c0^{-1} * sum_{j=1..k} p_j q_{k-j}
  std::vector<RingElem> q = {c0inv};
  std::vector<RingElem> pc;
  for (int j = 0; j <= order; ++j) pc.push_back(p.coeff_in_var(var, j));
  for (int k = 1; k <= order; ++k) {
    RingElem acc = RingElem::zero(ctx);
    for (int j = 1; j <= k; ++j) acc = acc + pc[j] * q[k - j];
    q.push_back(c0inv.neg() * acc);
  }
  RingElem result = RingElem::zero(ctx);
  for (int k = 0; k <= order; ++k) result = result + q[k] * t.pow(k);
  return result;
}

RingElem series_truncated_log_derivative(const RingElem& p, int var, int order) {
  const RingContextPtr& ctx = p.context();
  RingElem t = RingElem::variable(ctx, var);
  RingElem dp = series_derivative(p, var);
  RingElem pinv = series_truncated_inverse(p, var, order);
  return series_truncate(t.neg() * dp * pinv, var, order);
}

}  // namespace detlab
