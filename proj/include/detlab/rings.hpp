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

#ifndef DETLAB_RINGS_HPP
#define DETLAB_RINGS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "detlab/error.hpp"

namespace detlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingKind { Integers, Rationals, IntegersMod, PrimeField, Polynomial, DualNumbers };

class RingContext;
using RingContextPtr = std::shared_ptr<const RingContext>;

/// Declares the ring every value lives over.  Contexts are immutable and
/// shared; scalars sit at the bottom, Polynomial and DualNumbers stack on
/// top of another context.  Nested Polynomial contexts are flattened into a
/// single variable list.
class RingContext {
 public:
  RingKind kind;
  Int modulus;                     // IntegersMod / PrimeField
  RingContextPtr base;             // Polynomial / DualNumbers
  std::vector<std::string> vars;   // Polynomial

  static RingContextPtr integers();
  static RingContextPtr rationals();
  static RingContextPtr integers_mod(const Int& n);        // n >= 2, composite allowed
  static RingContextPtr prime_field(const Int& p);         // primality checked
  static RingContextPtr polynomial(RingContextPtr base, std::vector<std::string> vars);
  static RingContextPtr dual(RingContextPtr base);

  bool is_scalar() const { return kind != RingKind::Polynomial && kind != RingKind::DualNumbers; }
  bool is_field() const { return kind == RingKind::Rationals || kind == RingKind::PrimeField; }
  Int characteristic() const;
  int var_index(const std::string& name) const;  // -1 if absent
  std::string describe() const;
};

bool same_context(const RingContextPtr& a, const RingContextPtr& b);
/// True when `big` is obtained from `small` by adjoining polynomial
/// variables and/or a dual-number layer (coefficient-wise extensions count).
bool extends_context(const RingContextPtr& big, const RingContextPtr& small);

/// Sparse monomial: sorted (variable index, exponent > 0) pairs.  Ordered by
/// graded lexicographic order (total degree first, then lexicographic on the
/// dense exponent vector, earlier variables more significant).
struct Monomial {
  std::vector<std::pair<int, int>> factors;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int index, int exp = 1);
  int total_degree() const;
  int exponent(int var) const;
  Monomial times(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;
};

bool graded_lex_less(const Monomial& a, const Monomial& b);

class RingElem;

namespace detail {
struct PolyData {
  // sorted by graded_lex_less, no zero coefficients, coefficients in base ctx
  std::vector<std::pair<Monomial, RingElem>> terms;
};
struct DualData {
  std::vector<RingElem> parts;  // [constant part, epsilon part], both in base ctx
};
}  // namespace detail

/// Immutable exact value over an explicit RingContext.  Payload is kept in
/// canonical form: residues in [0,n), fractions reduced with positive
/// denominator, polynomials sorted with no zero terms.
class RingElem {
 public:
  RingElem() = default;

  static RingElem zero(const RingContextPtr& ctx);
  static RingElem one(const RingContextPtr& ctx);
  static RingElem from_int(const RingContextPtr& ctx, const Int& n);
  static RingElem from_int(const RingContextPtr& ctx, long long n) { return from_int(ctx, Int(n)); }
  static RingElem from_rat(const RingContextPtr& ctx, const Rat& q);
  static RingElem variable(const RingContextPtr& ctx, int var_index);
  static RingElem variable(const RingContextPtr& ctx, const std::string& name);
  static RingElem epsilon(const RingContextPtr& ctx);
  /// Normalizing constructor for polynomial payloads (merges, sorts, drops zeros).
  static RingElem make_poly(const RingContextPtr& ctx,
                            std::vector<std::pair<Monomial, RingElem>> terms);
  static RingElem make_dual(const RingContextPtr& ctx, RingElem constant, RingElem eps);

  const RingContextPtr& context() const { return ctx_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  RingElem operator+(const RingElem& rhs) const;
  RingElem operator-(const RingElem& rhs) const;
  RingElem operator*(const RingElem& rhs) const;
  RingElem neg() const;
  RingElem pow(unsigned long long e) const;
  RingElem inv() const;  // NotAUnit on non-units

  bool operator==(const RingElem& rhs) const;
  bool operator!=(const RingElem& rhs) const { return !(*this == rhs); }

  // scalar access
  const Int& int_value() const;  // Integers / IntegersMod / PrimeField
  const Rat& rat_value() const;  // Rationals

  // polynomial access
  const std::vector<std::pair<Monomial, RingElem>>& poly_terms() const;
  /// Coefficient of the full monomial (unnamed variables have exponent 0);
  /// result lives over the base context.
  RingElem poly_coeff(const Monomial& m) const;
  RingElem poly_coeff(const std::map<std::string, int>& exponents) const;  // UnknownVariable
  /// Coefficient of var^k, keeping the other variables: result stays in the
  /// same context with `var` absent from every term.
  RingElem coeff_in_var(int var, int k) const;
  int degree_in_var(int var) const;
  bool involves_var(int var) const;

  // dual access
  RingElem dual_constant() const;
  RingElem dual_eps() const;

  /// Deterministic human-readable form (graded-lex descending terms).
  std::string str() const;

  /// A structurally identical copy rebuilt from parts; used by the
  /// canonicalization-idempotence property test.
  RingElem recanonicalized() const;

 private:
  using Payload = std::variant<Int, Rat, detail::PolyData, detail::DualData>;
  RingContextPtr ctx_;
  Payload payload_;

  RingElem(RingContextPtr ctx, Payload payload) : ctx_(std::move(ctx)), payload_(std::move(payload)) {}
  static Int normalize_residue(const Int& v, const Int& n);
  friend RingElem embed(const RingElem&, const RingContextPtr&);
  friend RingElem restrict_context(const RingElem&, const RingContextPtr&);
};

/// Lifts a value into an extension context (UnsupportedExtension otherwise).
RingElem embed(const RingElem& value, const RingContextPtr& target);
/// Inverse of embed for values that do not involve the adjoined structure.
RingElem restrict_context(const RingElem& value, const RingContextPtr& target);

/// Adjoins n fresh polynomial variables (names prefix1, prefix2, ... skipping
/// collisions).  Returns the extended context and the new variable indices.
std::pair<RingContextPtr, std::vector<int>> extend_with_vars(const RingContextPtr& ctx, int n,
                                                             const std::string& prefix = "t");

// ---- truncated power series in one designated variable ---------------------

/// Formal derivative with respect to var.
RingElem series_derivative(const RingElem& p, int var);
/// Inverse of p modulo var^(order+1); the var^0 coefficient must be a unit
/// (NonUnitConstantTerm).
RingElem series_truncated_inverse(const RingElem& p, int var, int order);
/// -var * (d/dvar p) / p modulo var^(order+1).
RingElem series_truncated_log_derivative(const RingElem& p, int var, int order);
/// Drops every term of degree > order in var.
RingElem series_truncate(const RingElem& p, int var, int order);

}  // namespace detlab

#endif  // DETLAB_RINGS_HPP
