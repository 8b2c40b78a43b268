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

#include "pncodes/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

#include "pncodes/errors.hpp"

namespace pncodes {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("cyclotomic coefficient overflow");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("cyclotomic coefficient overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("cyclotomic coefficient overflow");
  }
  return r;
}

std::uint32_t mod_p(std::int64_t k, std::uint32_t p) {
  const std::int64_t r = k % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void require_same_ring(const CycInt& a, const CycInt& b) {
  if (a.p() != b.p()) throw UsageError("cyclotomic elements over different p");
  if (a.p() == 0) throw UsageError("default-constructed cyclotomic element");
}

}  // namespace

CycInt::CycInt(std::uint32_t p) : p_(p), coeffs_(p >= 2 ? p - 1 : 0, 0) {
  if (p < 3 || p % 2 == 0) throw DomainError("cyclotomic ring needs odd p");
}

CycInt::CycInt(std::uint32_t p, std::vector<std::int64_t> coeffs)
    : CycInt(p) {
  if (coeffs.size() != p - 1) {
    throw UsageError("expected p-1 power-basis coefficients");
  }
  coeffs_ = std::move(coeffs);
}

CycInt CycInt::canonicalize(std::uint32_t p, std::vector<std::int64_t> full) {
  CycInt out(p);
  const std::int64_t top = full[p - 1];
  for (std::uint32_t k = 0; k + 1 < p; ++k) {
    out.coeffs_[k] = checked_sub(full[k], top);
  }
  return out;
}

CycInt CycInt::constant(std::uint32_t p, std::int64_t value) {
  CycInt out(p);
  out.coeffs_[0] = value;
  return out;
}

CycInt CycInt::root_power(std::uint32_t p, std::int64_t k) {
  std::vector<std::int64_t> full(p, 0);
  full[mod_p(k, p)] = 1;
  return canonicalize(p, std::move(full));
}

CycInt CycInt::from_histogram(std::uint32_t p,
                              std::span<const std::uint64_t> counts) {
  if (counts.size() != p) throw UsageError("histogram must have p buckets");
  std::vector<std::int64_t> full(p);
  for (std::uint32_t i = 0; i < p; ++i) {
    if (counts[i] > static_cast<std::uint64_t>(INT64_MAX)) {
      throw std::overflow_error("histogram count overflow");
    }
    full[i] = static_cast<std::int64_t>(counts[i]);
  }
  return canonicalize(p, std::move(full));
}

bool CycInt::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> CycInt::as_integer() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return std::nullopt;
  }
  return coeffs_.empty() ? 0 : coeffs_[0];
}

CycInt CycInt::operator+(const CycInt& w) const {
  require_same_ring(*this, w);
  CycInt out(p_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out.coeffs_[k] = checked_add(coeffs_[k], w.coeffs_[k]);
  }
  return out;
}

CycInt& CycInt::operator+=(const CycInt& w) { return *this = *this + w; }

CycInt CycInt::operator-(const CycInt& w) const {
  require_same_ring(*this, w);
  CycInt out(p_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out.coeffs_[k] = checked_sub(coeffs_[k], w.coeffs_[k]);
  }
  return out;
}

CycInt CycInt::operator-() const { return scale(-1); }

CycInt CycInt::operator*(const CycInt& w) const {
  require_same_ring(*this, w);
  std::vector<std::int64_t> full(p_, 0);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p_; ++j) {
      const std::uint32_t k = (i + j) % p_;
      full[k] = checked_add(full[k], checked_mul(coeffs_[i], w.coeffs_[j]));
    }
  }
  return canonicalize(p_, std::move(full));
}

CycInt CycInt::scale(std::int64_t n) const {
  CycInt out(p_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out.coeffs_[k] = checked_mul(coeffs_[k], n);
  }
  return out;
}

CycInt CycInt::galois(std::uint32_t k) const {
  if (k % p_ == 0) throw DomainError("Galois exponent must be a unit mod p");
  std::vector<std::int64_t> full(p_, 0);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) {
    const std::uint32_t j =
        static_cast<std::uint32_t>(std::uint64_t{i} * k % p_);
    full[j] = checked_add(full[j], coeffs_[i]);
  }
  return canonicalize(p_, std::move(full));
}

CycInt CycInt::conj() const { return galois(p_ - 1); }

CycInt CycInt::abs_square() const { return *this * conj(); }

std::string CycInt::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out << ',';
    out << coeffs_[k];
  }
  out << ']';
  return out.str();
}

int legendre(std::int64_t t, std::uint32_t p) {
  const std::uint64_t r = mod_p(t, p);
  if (r == 0) return 0;
  std::uint64_t result = 1, base = r;
  for (std::uint64_t e = (p - 1) / 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result == 1 ? 1 : -1;
}

CycInt gauss_sum(std::uint32_t p) {
  CycInt g(p);
  for (std::uint32_t t = 1; t < p; ++t) {
    g += CycInt::root_power(p, t).scale(legendre(t, p));
  }
  return g;
}

namespace {

std::int64_t int_pow(std::int64_t base, std::uint32_t e) {
  std::int64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

// p^{floor(m/2)} times 1 (m even) or times g (m odd).
CycInt walsh_unit(std::uint32_t p, std::uint32_t m) {
  const std::int64_t scale = int_pow(p, m / 2);
  if (m % 2 == 0) return CycInt::constant(p, scale);
  return gauss_sum(p).scale(scale);
}

}  // namespace

CycInt recompose_walsh(const WalshDecomposition& d, std::uint32_t p,
                       std::uint32_t m) {
  return (walsh_unit(p, m) * CycInt::root_power(p, d.dual)).scale(d.sign);
}

std::optional<WalshDecomposition> decompose_weakly_regular(const CycInt& w,
                                                           std::uint32_t p,
                                                           std::uint32_t m) {
  if (w.p() != p) throw UsageError("Walsh value over a different p");
  const CycInt unit = walsh_unit(p, m);
  for (std::uint32_t s = 0; s < p; ++s) {
    const CycInt candidate = unit * CycInt::root_power(p, s);
    if (candidate == w) return WalshDecomposition{1, s};
    if (candidate.scale(-1) == w) return WalshDecomposition{-1, s};
  }
  return std::nullopt;
}

}  // namespace pncodes
