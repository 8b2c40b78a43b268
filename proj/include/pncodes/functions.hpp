// Copyright 2026 The pncodes Authors.
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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pncodes/field.hpp"

namespace pncodes {

enum class Codomain {
  kField,  // F_q -> F_q, values are canonical element indices
  kPrime,  // F_q -> F_p, values are residues
};

// Exhaustive lookup table of a function on F_q, indexed by canonical
// element index.
class FunctionTable {
 public:
  // Throws UsageError if the length is not q or a value is out of range.
  FunctionTable(Field field, Codomain codomain,
                std::vector<std::uint32_t> values);

  const Field& field() const { return field_; }
  Codomain codomain() const { return codomain_; }
  std::span<const std::uint32_t> values() const { return values_; }
  std::uint32_t operator[](std::uint32_t x) const { return values_[x]; }
  std::uint32_t size() const {
    return static_cast<std::uint32_t>(values_.size());
  }

  // Same table with one entry replaced. Used to build negative controls.
  FunctionTable with_value(std::uint32_t x, std::uint32_t value) const;

 private:
  Field field_;
  Codomain codomain_;
  std::vector<std::uint32_t> values_;
};

// ---- function specifications ----

struct Term {
  FieldElement coefficient;
  // 0 only for constant terms (written without x).
  std::uint64_t exponent = 0;
};

enum class PNKind { kSquare, kDoMonomial, kCoulterMatthews, kDingYuan, kExpression };

struct PNSpec {
  PNKind kind = PNKind::kSquare;
  std::uint32_t k = 0;
  std::optional<FieldElement> u;
  std::string expr;
  std::map<std::string, FieldElement> params;
  // Resolved terms, filled for kExpression.
  std::vector<Term> terms;

  static PNSpec square();
  // x^{p^k+1}.
  static PNSpec do_monomial(std::uint32_t k);
  // x^{(3^k+1)/2}.
  static PNSpec coulter_matthews(std::uint32_t k);
  // x^10 - u x^6 - u^2 x^2.
  static PNSpec ding_yuan(FieldElement u);

  std::string kind_name() const;
  std::string describe() const;
};

// Parses a polynomial such as "x^10 - u*x^6 - u^2*x^2".
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | NAME ['^' INT] | 'x' ['^' INT]
//
// At most one factor of a term may be a power of x; a term without x is a
// constant. Names resolve through `params`; the unbound name `g` denotes
// Field::generator(). Throws ParseError (with byte offset) on malformed
// input, unbound names, x^0, or any x exponent >= q.
PNSpec parse_expression(std::string_view text,
                        const std::map<std::string, FieldElement>& params,
                        const Field& field);

// Throws DomainError naming the violated family condition.
void validate(const PNSpec& spec, const Field& field);

// Validates, then tabulates the function over all of F_q.
FunctionTable compile(const PNSpec& spec, const Field& field);

// Witness that D_a f is not balanced: f(x1 + a) - f(x1) and
// f(x2 + a) - f(x2) collide (field codomain), or the value `collision`
// is hit a wrong number of times (prime codomain).
struct PNViolation {
  std::uint32_t shift = 0;
  std::uint32_t x1 = 0;
  std::uint32_t x2 = 0;
  std::uint32_t difference = 0;
};

// Smallest shift a != 0 whose difference function is not balanced, with a
// colliding pair. O(q^2).
std::optional<PNViolation> find_pn_violation(const FunctionTable& f);
bool is_perfect_nonlinear(const FunctionTable& f);

// x -> Tr(a Pi(x) + b x) + t, as an F_q -> F_p table. a and b are indices.
FunctionTable component_function(const FunctionTable& pi, std::uint32_t a,
                                  std::uint32_t b, Residue t);

// Fiber sizes (n_0, ..., n_{p-1}) of a map into F_p.
struct ValueDist {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  friend bool operator==(const ValueDist&, const ValueDist&) = default;
};

ValueDist value_distribution(const FunctionTable& g);

// Fiber identities every perfect nonlinear map F_q -> F_p satisfies:
//   sum_z k_z^2         = (q^2 + (p-1) q) / p
//   sum_z k_z k_{z+b}   = q (q-1) / p          for every b != 0
//   sum_z k_z           = q
bool lemma1_check(const ValueDist& dist, std::uint64_t q);
bool lemma1_check(const FunctionTable& f);

std::uint64_t zero_preimage_count(const FunctionTable& pi);
// Pi(x) == Pi(-x) for all x.
bool is_even_function(const FunctionTable& pi);

}  // namespace pncodes
