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
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pncodes {

// A residue modulo the characteristic p, always kept in [0, p-1].
using Residue = std::uint32_t;

// Largest field order the library will build tables for.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;
// Fields up to this order get log/antilog multiplication tables.
inline constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;

// Parameters of F_{p^m}: the characteristic, the degree and the monic
// modulus listed low to high (c_0, ..., c_{m-1}, 1).
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// True iff `poly` (coefficients low to high, any leading coefficient) is
// irreducible over F_p. Uses Ben-Or's gcd test.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

// Lexicographically smallest monic irreducible polynomial of degree m over
// F_p, comparing the tuples (c_0, ..., c_{m-1}). Throws DomainError unless
// p is an odd prime and m >= 1.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m);

namespace detail {
class FieldData;
}  // namespace detail

class Field;

// Element of F_{p^m}. Cheap value type: a pointer to the owning field's
// tables plus the canonical index. Must not outlive the Field it came from.
//
// The canonical index of c_0 + c_1 a + ... + c_{m-1} a^{m-1} is
// c_0 p^{m-1} + c_1 p^{m-2} + ... + c_{m-1}, so increasing indices enumerate
// the coefficient tuples lexicographically with zero first.
class FieldElement {
 public:
  FieldElement() = default;

  std::uint32_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  bool valid() const { return data_ != nullptr; }

  // (c_0, ..., c_{m-1}).
  std::vector<std::uint32_t> coeffs() const;
  const FieldSpec& spec() const;

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const;
  Residue trace() const;

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x);
  friend bool operator==(const FieldElement& x, const FieldElement& y);

  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }

  std::string to_string() const;

 private:
  friend class Field;
  FieldElement(const detail::FieldData* data, std::uint32_t index)
      : data_(data), index_(index) {}

  const detail::FieldData* data_ = nullptr;
  std::uint32_t index_ = 0;
};

// F_{p^m} with a fixed polynomial basis. Immutable after construction and
// cheap to copy; copies share the same tables.
class Field {
 public:
  // Uses find_irreducible(p, m) as modulus.
  static Field create(std::uint32_t p, std::uint32_t m);
  // Validates the user-supplied modulus (monic, irreducible, digits < p).
  static Field from_spec(const FieldSpec& spec);

  const FieldSpec& spec() const;
  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t q() const;

  FieldElement zero() const { return element(0); }
  FieldElement one() const;
  FieldElement element(std::uint32_t index) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  // Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t value) const;
  // The basis element a^i.
  FieldElement basis(std::uint32_t i) const;
  // Lexicographically smallest primitive element.
  FieldElement generator() const;

  // All q elements in canonical order, zero first.
  std::vector<FieldElement> enumerate() const;

  // Index-level arithmetic for hot loops. Arguments are canonical indices.
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  Residue trace(std::uint32_t x) const;
  // Index of the prime-subfield element c.
  std::uint32_t from_residue(Residue c) const;
  // Coefficients (c_0, ..., c_{m-1}) of an index.
  std::vector<std::uint32_t> digits(std::uint32_t x) const;
  std::uint32_t from_digits(std::span<const std::uint32_t> coeffs) const;

  // Dense trace table indexed by canonical index.
  std::span<const std::uint8_t> trace_table() const;

  // Reference paths, independent of the lookup tables.
  std::uint32_t mul_schoolbook(std::uint32_t x, std::uint32_t y) const;
  // Sum of the Frobenius conjugates x^{p^i}, reduced into F_p.
  Residue trace_by_frobenius(std::uint32_t x) const;
  bool has_log_tables() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

}  // namespace pncodes
