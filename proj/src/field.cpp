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

#include "pncodes/field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "pncodes/errors.hpp"

namespace pncodes {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^{p-2}.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over F_p; b must be nonzero after trimming.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_odd_prime(std::uint32_t p) {
  if (!is_prime(p) || p == 2) {
    throw DomainError("characteristic must be an odd prime, got " +
                      std::to_string(p));
  }
  if (p > 255) {
    throw DomainError("characteristic above 255 is not supported");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // f is irreducible iff gcd(f, X^{p^i} - X) = 1 for 1 <= i <= degree/2.
  Poly x_power{0, 1};
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    x_power = poly_powmod(x_power, p, f, p);
    Poly diff = x_power;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m) {
  require_odd_prime(p);
  if (m == 0) throw DomainError("extension degree must be at least 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    count *= p;
    if (count > kMaxFieldOrder) throw DomainError("field order too large");
  }
  // Walk (c_0, ..., c_{m-1}) in lexicographic order: c_0 is the most
  // significant digit of the counter.
  Poly candidate(m + 1, 0);
  candidate[m] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t rest = n;
    for (std::uint32_t i = m; i-- > 0;) {
      candidate[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(candidate, p)) return candidate;
  }
  throw InternalConsistencyError("no irreducible polynomial found");
}

namespace detail {

class FieldData {
 public:
  explicit FieldData(FieldSpec spec) : spec_(std::move(spec)) {
    p_ = spec_.p;
    m_ = spec_.m;
    q_ = 1;
    for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
    place_.resize(m_);
    std::uint32_t w = 1;
    for (std::uint32_t i = m_; i-- > 0;) {
      place_[i] = w;
      w *= p_;
    }
    build_trace_table();
    generator_ = find_generator();
    if (q_ <= kLogTableLimit) build_log_tables();
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t generator() const { return generator_; }
  bool has_log_tables() const { return !exp_.empty(); }
  std::span<const std::uint8_t> trace_table() const { return trace_; }

  std::uint32_t digit(std::uint32_t x, std::uint32_t i) const {
    return (x / place_[i]) % p_;
  }

  std::vector<std::uint32_t> digits(std::uint32_t x) const {
    std::vector<std::uint32_t> out(m_);
    for (std::uint32_t i = m_; i-- > 0;) {
      out[i] = x % p_;
      x /= p_;
    }
    return out;
  }

  std::uint32_t from_digits(std::span<const std::uint32_t> c) const {
    std::uint32_t x = 0;
    for (std::uint32_t i = 0; i < m_; ++i) x = x * p_ + c[i] % p_;
    return x;
  }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      const std::uint32_t w = place_[i];
      out += ((x / w + y / w) % p_) * w;
      x %= w;
      y %= w;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t x) const {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      const std::uint32_t w = place_[i];
      out += ((p_ - x / w) % p_) * w;
      x %= w;
    }
    return out;
  }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (!exp_.empty()) {
      if (x == 0 || y == 0) return 0;
      return exp_[log_[x] + log_[y]];
    }
    return mul_schoolbook(x, y);
  }

  std::uint32_t mul_schoolbook(std::uint32_t x, std::uint32_t y) const {
    const auto a = digits(x);
    const auto b = digits(y);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < m_; ++j) {
        prod[i + j] += std::uint64_t{a[i]} * b[j];
      }
    }
    for (auto& c : prod) c %= p_;
    // a^m = -(c_0 + ... + c_{m-1} a^{m-1}).
    for (std::size_t k = prod.size(); k-- > m_;) {
      const std::uint64_t top = prod[k];
      if (top == 0) continue;
      prod[k] = 0;
      for (std::uint32_t i = 0; i < m_; ++i) {
        prod[k - m_ + i] =
            (prod[k - m_ + i] + (p_ - spec_.modulus[i]) * top) % p_;
      }
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      out = out * p_ + static_cast<std::uint32_t>(prod[i]);
    }
    return out;
  }

  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t result = one();
    std::uint32_t base = x;
    while (e) {
      if (e & 1) result = mul(result, base);
      e >>= 1;
      if (e) base = mul(base, base);
    }
    return result;
  }

  std::uint32_t inv(std::uint32_t x) const {
    if (x == 0) throw DomainError("inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1) - log_[x]];
    return pow(x, q_ - 2);
  }

  std::uint32_t one() const { return place_[0]; }

  std::uint32_t from_residue(Residue c) const { return (c % p_) * place_[0]; }

  Residue trace(std::uint32_t x) const { return trace_[x]; }

  Residue trace_by_frobenius(std::uint32_t x) const {
    std::uint32_t sum = 0;
    std::uint32_t conj = x;
    for (std::uint32_t i = 0; i < m_; ++i) {
      sum = add(sum, conj);
      conj = pow_generic(conj, p_);
    }
    if (sum % place_[0] != 0) {
      throw InternalConsistencyError("trace left the prime subfield");
    }
    return sum / place_[0];
  }

 private:
  std::uint32_t pow_generic(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t result = one();
    std::uint32_t base = x;
    while (e) {
      if (e & 1) result = mul_schoolbook(result, base);
      e >>= 1;
      if (e) base = mul_schoolbook(base, base);
    }
    return result;
  }

  void build_trace_table() {
    // Tr is F_p-linear, so Tr(x) = sum_i c_i Tr(a^i).
    std::vector<std::uint32_t> basis_trace(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      basis_trace[i] = trace_by_frobenius(place_[i]);
    }
    trace_.assign(q_, 0);
    for (std::uint32_t x = 0; x < q_; ++x) {
      std::uint32_t t = 0;
      for (std::uint32_t i = 0; i < m_; ++i) t += digit(x, i) * basis_trace[i];
      trace_[x] = static_cast<std::uint8_t>(t % p_);
    }
  }

  std::uint32_t find_generator() const {
    const std::uint64_t order = q_ - 1;
    const auto factors = prime_factors(order);
    for (std::uint32_t x = 1; x < q_; ++x) {
      bool primitive = true;
      for (auto r : factors) {
        if (pow_generic(x, order / r) == one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) return x;
    }
    throw InternalConsistencyError("field has no primitive element");
  }

  void build_log_tables() {
    exp_.assign(2 * static_cast<std::size_t>(q_), 0);
    log_.assign(q_, 0);
    std::uint32_t x = one();
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = x;
      exp_[k + q_ - 1] = x;
      log_[x] = k;
      x = mul_schoolbook(x, generator_);
    }
  }

  FieldSpec spec_;
  std::uint32_t p_ = 0, m_ = 0, q_ = 0;
  // place_[i] = p^{m-1-i}, the weight of coefficient c_i in an index.
  std::vector<std::uint32_t> place_;
  std::vector<std::uint8_t> trace_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::uint32_t generator_ = 0;
};

}  // namespace detail

namespace {

const detail::FieldData& same_field(const detail::FieldData* a,
                                    const detail::FieldData* b) {
  if (a == nullptr || b == nullptr) {
    throw UsageError("operation on a default-constructed field element");
  }
  if (a != b && !(a->spec() == b->spec())) {
    throw UsageError("field elements belong to different fields");
  }
  return *a;
}

}  // namespace

// ---- FieldElement ----

std::vector<std::uint32_t> FieldElement::coeffs() const {
  if (!data_) throw UsageError("default-constructed field element");
  return data_->digits(index_);
}

const FieldSpec& FieldElement::spec() const {
  if (!data_) throw UsageError("default-constructed field element");
  return data_->spec();
}

FieldElement FieldElement::inv() const {
  if (!data_) throw UsageError("default-constructed field element");
  return {data_, data_->inv(index_)};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (!data_) throw UsageError("default-constructed field element");
  return {data_, data_->pow(index_, e)};
}

FieldElement FieldElement::frobenius() const { return pow(spec().p); }

Residue FieldElement::trace() const {
  if (!data_) throw UsageError("default-constructed field element");
  return data_->trace(index_);
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  const auto& f = same_field(x.data_, y.data_);
  return {x.data_, f.add(x.index_, y.index_)};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  const auto& f = same_field(x.data_, y.data_);
  return {x.data_, f.add(x.index_, f.neg(y.index_))};
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  const auto& f = same_field(x.data_, y.data_);
  return {x.data_, f.mul(x.index_, y.index_)};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  const auto& f = same_field(x.data_, y.data_);
  return {x.data_, f.mul(x.index_, f.inv(y.index_))};
}

FieldElement operator-(const FieldElement& x) {
  if (!x.data_) throw UsageError("default-constructed field element");
  return {x.data_, x.data_->neg(x.index_)};
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  if (x.data_ == nullptr || y.data_ == nullptr) {
    return x.data_ == y.data_ && x.index_ == y.index_;
  }
  same_field(x.data_, y.data_);
  return x.index_ == y.index_;
}

std::string FieldElement::to_string() const {
  const auto c = coeffs();
  std::ostringstream out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ',';
    out << c[i];
  }
  return out.str();
}

// ---- Field ----

Field Field::create(std::uint32_t p, std::uint32_t m) {
  FieldSpec spec{p, m, find_irreducible(p, m)};
  return Field(std::make_shared<const detail::FieldData>(std::move(spec)));
}

Field Field::from_spec(const FieldSpec& spec) {
  require_odd_prime(spec.p);
  if (spec.m == 0) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.m; ++i) {
    q *= spec.p;
    if (q > kMaxFieldOrder) throw DomainError("field order too large");
  }
  if (spec.modulus.size() != spec.m + 1) {
    throw DomainError("modulus must list exactly m+1 coefficients");
  }
  if (spec.modulus.back() != 1) throw DomainError("modulus must be monic");
  for (auto c : spec.modulus) {
    if (c >= spec.p) throw DomainError("modulus coefficient out of range");
  }
  if (!is_irreducible(spec.modulus, spec.p)) {
    throw DomainError("modulus is reducible over F_p");
  }
  return Field(std::make_shared<const detail::FieldData>(spec));
}

const FieldSpec& Field::spec() const { return data_->spec(); }
std::uint32_t Field::p() const { return data_->p(); }
std::uint32_t Field::m() const { return data_->m(); }
std::uint32_t Field::q() const { return data_->q(); }

FieldElement Field::one() const { return element(data_->one()); }

FieldElement Field::element(std::uint32_t index) const {
  if (index >= data_->q()) throw UsageError("field element index out of range");
  return FieldElement(data_.get(), index);
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != data_->m()) {
    throw UsageError("expected " + std::to_string(data_->m()) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  }
  for (auto c : coeffs) {
    if (c >= data_->p()) throw UsageError("coefficient out of range");
  }
  return FieldElement(data_.get(), data_->from_digits(coeffs));
}

FieldElement Field::from_int(std::int64_t value) const {
  const std::int64_t p = data_->p();
  const auto r = static_cast<Residue>(((value % p) + p) % p);
  return FieldElement(data_.get(), data_->from_residue(r));
}

FieldElement Field::basis(std::uint32_t i) const {
  if (i >= data_->m()) throw UsageError("basis index out of range");
  std::vector<std::uint32_t> c(data_->m(), 0);
  c[i] = 1;
  return from_coeffs(c);
}

FieldElement Field::generator() const { return element(data_->generator()); }

std::vector<FieldElement> Field::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(data_->q());
  for (std::uint32_t x = 0; x < data_->q(); ++x) {
    out.push_back(FieldElement(data_.get(), x));
  }
  return out;
}

std::uint32_t Field::add(std::uint32_t x, std::uint32_t y) const {
  return data_->add(x, y);
}
std::uint32_t Field::sub(std::uint32_t x, std::uint32_t y) const {
  return data_->add(x, data_->neg(y));
}
std::uint32_t Field::neg(std::uint32_t x) const { return data_->neg(x); }
std::uint32_t Field::mul(std::uint32_t x, std::uint32_t y) const {
  return data_->mul(x, y);
}
std::uint32_t Field::inv(std::uint32_t x) const { return data_->inv(x); }
std::uint32_t Field::pow(std::uint32_t x, std::uint64_t e) const {
  return data_->pow(x, e);
}
Residue Field::trace(std::uint32_t x) const { return data_->trace(x); }
std::uint32_t Field::from_residue(Residue c) const {
  return data_->from_residue(c);
}
std::vector<std::uint32_t> Field::digits(std::uint32_t x) const {
  return data_->digits(x);
}
std::uint32_t Field::from_digits(std::span<const std::uint32_t> c) const {
  if (c.size() != data_->m()) throw UsageError("wrong coefficient count");
  return data_->from_digits(c);
}
std::span<const std::uint8_t> Field::trace_table() const {
  return data_->trace_table();
}
std::uint32_t Field::mul_schoolbook(std::uint32_t x, std::uint32_t y) const {
  return data_->mul_schoolbook(x, y);
}
Residue Field::trace_by_frobenius(std::uint32_t x) const {
  return data_->trace_by_frobenius(x);
}
bool Field::has_log_tables() const { return data_->has_log_tables(); }

bool operator==(const Field& a, const Field& b) {
  return a.data_ == b.data_ || a.spec() == b.spec();
}

}  // namespace pncodes
