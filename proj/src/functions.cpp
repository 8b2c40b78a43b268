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

#include "pncodes/functions.hpp"

#include <numeric>
#include <sstream>

#include "pncodes/errors.hpp"
#include "pncodes/parallel.hpp"

namespace pncodes {

FunctionTable::FunctionTable(Field field, Codomain codomain,
                             std::vector<std::uint32_t> values)
    : field_(std::move(field)), codomain_(codomain), values_(std::move(values)) {
  if (values_.size() != field_.q()) {
    throw UsageError("function table length must equal q");
  }
  const std::uint32_t bound = codomain_ == Codomain::kField ? field_.q() : field_.p();
  for (auto v : values_) {
    if (v >= bound) throw UsageError("function table value out of range");
  }
}

FunctionTable FunctionTable::with_value(std::uint32_t x,
                                        std::uint32_t value) const {
  auto values = values_;
  if (x >= values.size()) throw UsageError("function table index out of range");
  values[x] = value;
  return FunctionTable(field_, codomain_, std::move(values));
}

// ---- PNSpec ----

PNSpec PNSpec::square() { return PNSpec{}; }

PNSpec PNSpec::do_monomial(std::uint32_t k) {
  PNSpec s;
  s.kind = PNKind::kDoMonomial;
  s.k = k;
  return s;
}

PNSpec PNSpec::coulter_matthews(std::uint32_t k) {
  PNSpec s;
  s.kind = PNKind::kCoulterMatthews;
  s.k = k;
  return s;
}

PNSpec PNSpec::ding_yuan(FieldElement u) {
  PNSpec s;
  s.kind = PNKind::kDingYuan;
  s.u = u;
  return s;
}

std::string PNSpec::kind_name() const {
  switch (kind) {
    case PNKind::kSquare:
      return "square";
    case PNKind::kDoMonomial:
      return "do_monomial";
    case PNKind::kCoulterMatthews:
      return "coulter_matthews";
    case PNKind::kDingYuan:
      return "ding_yuan";
    case PNKind::kExpression:
      return "expr";
  }
  return "unknown";
}

std::string PNSpec::describe() const {
  std::ostringstream out;
  switch (kind) {
    case PNKind::kSquare:
      out << "x^2";
      break;
    case PNKind::kDoMonomial:
      out << "x^(p^" << k << "+1)";
      break;
    case PNKind::kCoulterMatthews:
      out << "x^((3^" << k << "+1)/2)";
      break;
    case PNKind::kDingYuan:
      out << "x^10 - u*x^6 - u^2*x^2 with u=(" << (u ? u->to_string() : "?")
          << ")";
      break;
    case PNKind::kExpression:
      out << expr;
      break;
  }
  return out.str();
}

// ---- compile ----

namespace {

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

// (base^e) mod n without overflow for n < 2^32.
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  base %= n;
  while (e) {
    if (e & 1) r = r * base % n;
    base = base * base % n;
    e >>= 1;
  }
  return r;
}

// An exponent e' in [1, q-1] with x^{e'} = x^e on all of F_q, for e >= 1.
std::uint64_t reduce_exponent(std::uint64_t e_mod, std::uint64_t q) {
  const std::uint64_t r = e_mod % (q - 1);
  return r == 0 ? q - 1 : r;
}

std::vector<Term> catalog_terms(const PNSpec& spec, const Field& field) {
  const std::uint64_t q = field.q();
  const std::uint64_t p = field.p();
  const std::uint64_t m = field.m();
  switch (spec.kind) {
    case PNKind::kSquare:
      return {Term{field.one(), reduce_exponent(2, q)}};
    case PNKind::kDoMonomial: {
      // x^{p^k} = x^{p^{k mod m}} on F_q.
      const std::uint64_t e = powmod(p, spec.k % m, q - 1) + 1;
      return {Term{field.one(), reduce_exponent(e, q)}};
    }
    case PNKind::kCoulterMatthews: {
      // (3^k + 1)/2 mod (q-1), computed through 3^k mod 2(q-1).
      const std::uint64_t n2 = 2 * (q - 1);
      const std::uint64_t twice = (powmod(3, spec.k, n2) + 1) % n2;
      return {Term{field.one(), reduce_exponent(twice / 2, q)}};
    }
    case PNKind::kDingYuan: {
      const FieldElement u = field.element(spec.u->index());
      return {Term{field.one(), reduce_exponent(10, q)},
              Term{-u, reduce_exponent(6, q)},
              Term{-(u * u), reduce_exponent(2, q)}};
    }
    case PNKind::kExpression:
      return spec.terms;
  }
  return {};
}

}  // namespace

void validate(const PNSpec& spec, const Field& field) {
  const std::uint32_t p = field.p();
  const std::uint32_t m = field.m();
  switch (spec.kind) {
    case PNKind::kSquare:
      return;
    case PNKind::kDoMonomial: {
      const std::uint64_t g = gcd64(m, spec.k);
      if ((m / g) % 2 == 0) {
        throw DomainError("do_monomial(k=" + std::to_string(spec.k) +
                          ") requires m/gcd(m,k) odd; here m/gcd(m,k) = " +
                          std::to_string(m / g));
      }
      return;
    }
    case PNKind::kCoulterMatthews:
      if (p != 3 || spec.k % 2 == 0 || gcd64(m, spec.k) != 1) {
        throw DomainError(
            "coulter_matthews requires p=3, k odd and gcd(m,k)=1 (got p=" +
            std::to_string(p) + ", m=" + std::to_string(m) +
            ", k=" + std::to_string(spec.k) + ")");
      }
      return;
    case PNKind::kDingYuan:
      if (p != 3 || m % 2 == 0 || !spec.u || spec.u->is_zero()) {
        throw DomainError(
            "ding_yuan requires p=3, m odd and u nonzero (got p=" +
            std::to_string(p) + ", m=" + std::to_string(m) + ")");
      }
      if (!(spec.u->spec() == field.spec())) {
        throw UsageError("ding_yuan parameter u belongs to a different field");
      }
      return;
    case PNKind::kExpression:
      if (spec.terms.empty()) throw DomainError("empty expression");
      for (const auto& t : spec.terms) {
        if (!(t.coefficient.spec() == field.spec())) {
          throw UsageError("expression was parsed over a different field");
        }
      }
      return;
  }
}

FunctionTable compile(const PNSpec& spec, const Field& field) {
  validate(spec, field);
  const auto terms = catalog_terms(spec, field);
  const std::uint32_t q = field.q();
  std::vector<std::uint32_t> values(q, 0);
  for (const auto& term : terms) {
    const std::uint32_t c = field.element(term.coefficient.index()).index();
    if (c == 0) continue;
    for (std::uint32_t x = 0; x < q; ++x) {
      const std::uint32_t power = term.exponent == 0 ? field.one().index()
                                                     : field.pow(x, term.exponent);
      values[x] = field.add(values[x], field.mul(c, power));
    }
  }
  return FunctionTable(field, Codomain::kField, std::move(values));
}

// ---- perfect nonlinearity ----

namespace {

std::optional<PNViolation> check_shift(const FunctionTable& f,
                                       std::uint32_t a) {
  const Field& field = f.field();
  const std::uint32_t q = field.q();
  const std::uint32_t p = field.p();
  if (f.codomain() == Codomain::kField) {
    constexpr std::uint32_t kUnseen = UINT32_MAX;
    std::vector<std::uint32_t> first(q, kUnseen);
    for (std::uint32_t x = 0; x < q; ++x) {
      const std::uint32_t d = field.sub(f[field.add(x, a)], f[x]);
      if (first[d] != kUnseen) return PNViolation{a, first[d], x, d};
      first[d] = x;
    }
    return std::nullopt;
  }
  std::vector<std::uint32_t> count(p, 0);
  std::vector<std::uint32_t> witness(p, 0);
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t d = (f[field.add(x, a)] + p - f[x]) % p;
    if (count[d]++ == 0) witness[d] = x;
  }
  for (std::uint32_t d = 0; d < p; ++d) {
    if (count[d] * p != q) {
      // Report an overfull value together with two of its preimages.
      for (std::uint32_t e = 0; e < p; ++e) {
        if (count[e] * p > q) {
          std::uint32_t second = witness[e];
          for (std::uint32_t x = witness[e] + 1; x < q; ++x) {
            if ((f[field.add(x, a)] + p - f[x]) % p == e) {
              second = x;
              break;
            }
          }
          return PNViolation{a, witness[e], second, e};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PNViolation> find_pn_violation(const FunctionTable& f) {
  const std::uint32_t q = f.field().q();
  std::vector<std::optional<PNViolation>> per_shift(q);
  parallel_for(q - 1, [&](std::size_t i) {
    const auto a = static_cast<std::uint32_t>(i + 1);
    per_shift[a] = check_shift(f, a);
  });
  for (std::uint32_t a = 1; a < q; ++a) {
    if (per_shift[a]) return per_shift[a];
  }
  return std::nullopt;
}

bool is_perfect_nonlinear(const FunctionTable& f) {
  return !find_pn_violation(f).has_value();
}

FunctionTable component_function(const FunctionTable& pi, std::uint32_t a,
                                 std::uint32_t b, Residue t) {
  if (pi.codomain() != Codomain::kField) {
    throw UsageError("component functions need an F_q -> F_q table");
  }
  const Field& field = pi.field();
  const std::uint32_t q = field.q();
  const std::uint32_t p = field.p();
  if (a >= q || b >= q) throw UsageError("component index out of range");
  std::vector<std::uint32_t> values(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t arg = field.add(field.mul(a, pi[x]), field.mul(b, x));
    values[x] = (field.trace(arg) + t) % p;
  }
  return FunctionTable(field, Codomain::kPrime, std::move(values));
}

// ---- value distributions ----

std::uint64_t ValueDist::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

ValueDist value_distribution(const FunctionTable& g) {
  if (g.codomain() != Codomain::kPrime) {
    throw UsageError("value distributions need an F_q -> F_p table");
  }
  ValueDist d{std::vector<std::uint64_t>(g.field().p(), 0)};
  for (auto v : g.values()) ++d.counts[v];
  return d;
}

bool lemma1_check(const ValueDist& dist, std::uint64_t q) {
  const std::uint64_t p = dist.counts.size();
  if (dist.total() != q) return false;
  std::uint64_t squares = 0;
  for (auto k : dist.counts) squares += k * k;
  if (squares * p != q * q + (p - 1) * q) return false;
  for (std::uint64_t b = 1; b < p; ++b) {
    std::uint64_t cross = 0;
    for (std::uint64_t z = 0; z < p; ++z) {
      cross += dist.counts[z] * dist.counts[(z + b) % p];
    }
    if (cross * p != q * (q - 1)) return false;
  }
  return true;
}

bool lemma1_check(const FunctionTable& f) {
  return lemma1_check(value_distribution(f), f.field().q());
}

std::uint64_t zero_preimage_count(const FunctionTable& pi) {
  std::uint64_t n = 0;
  for (auto v : pi.values()) n += v == 0;
  return n;
}

bool is_even_function(const FunctionTable& pi) {
  const Field& field = pi.field();
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    if (pi[x] != pi[field.neg(x)]) return false;
  }
  return true;
}

}  // namespace pncodes
