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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pncodes {

// Exact element of Z[xi] for xi a primitive p-th root of unity, stored in
// the power basis 1, xi, ..., xi^{p-2}. The canonical form eliminates
// xi^{p-1} = -(1 + xi + ... + xi^{p-2}), so equality is plain coefficient
// equality.
//
// Coefficients are 64-bit with checked arithmetic: any overflow throws
// std::overflow_error instead of wrapping.
class CycInt {
 public:
  CycInt() = default;
  // Zero of Z[xi_p].
  explicit CycInt(std::uint32_t p);
  // From p-1 power-basis coefficients.
  CycInt(std::uint32_t p, std::vector<std::int64_t> coeffs);

  static CycInt constant(std::uint32_t p, std::int64_t value);
  // xi^k, k taken mod p.
  static CycInt root_power(std::uint32_t p, std::int64_t k);
  // sum_i counts[i] xi^i for a length-p histogram.
  static CycInt from_histogram(std::uint32_t p,
                               std::span<const std::uint64_t> counts);

  std::uint32_t p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // The rational integer this element equals, if it lies in Z.
  std::optional<std::int64_t> as_integer() const;

  CycInt operator+(const CycInt& w) const;
  CycInt operator-(const CycInt& w) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& w) const;
  CycInt& operator+=(const CycInt& w);
  CycInt scale(std::int64_t n) const;
  // Image under xi -> xi^k for k a unit mod p (the Galois automorphism).
  CycInt galois(std::uint32_t k) const;
  // Complex conjugation, xi -> xi^{-1}.
  CycInt conj() const;
  // z * conj(z).
  CycInt abs_square() const;

  friend bool operator==(const CycInt&, const CycInt&) = default;

  std::string to_string() const;

 private:
  // Reduce a length-p vector (exponents 0..p-1) into canonical form.
  static CycInt canonicalize(std::uint32_t p, std::vector<std::int64_t> full);

  std::uint32_t p_ = 0;
  std::vector<std::int64_t> coeffs_;
};

// Legendre symbol (t/p) by Euler's criterion, with (0/p) = 0.
int legendre(std::int64_t t, std::uint32_t p);

// Quadratic Gauss sum g = sum_{t=1}^{p-1} (t/p) xi^t. Squares to
// (-1)^{(p-1)/2} p and has |g|^2 = p.
CycInt gauss_sum(std::uint32_t p);

// Sign and exponent such that a bent Walsh value W equals
//   sign * p^{m/2} * xi^dual                (m even)
//   sign * p^{(m-1)/2} * xi^dual * g        (m odd, g the Gauss sum).
struct WalshDecomposition {
  int sign = 1;
  std::uint32_t dual = 0;

  friend bool operator==(const WalshDecomposition&,
                         const WalshDecomposition&) = default;
};

// Searches the 2p candidates. Returns nullopt when W has no such form,
// which never happens for a genuine bent value.
std::optional<WalshDecomposition> decompose_weakly_regular(const CycInt& w,
                                                           std::uint32_t p,
                                                           std::uint32_t m);

// Inverse of decompose_weakly_regular.
CycInt recompose_walsh(const WalshDecomposition& d, std::uint32_t p,
                       std::uint32_t m);

}  // namespace pncodes
