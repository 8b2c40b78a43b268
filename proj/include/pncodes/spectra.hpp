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

#include "pncodes/cyclotomic.hpp"
#include "pncodes/functions.hpp"

namespace pncodes {

// Fills out[x] = Tr(b x) for every x.
void trace_row(const Field& field, std::uint32_t b, std::span<std::uint8_t> out);

// W_g(a) = sum_x xi^{g(x) + Tr(a x)}, summed by first bucketing the
// exponents mod p.
CycInt walsh(const FunctionTable& g, std::uint32_t a);
// The same sum, one root of unity per point.
CycInt walsh_naive(const FunctionTable& g, std::uint32_t a);
// W_g(a) for every a, in canonical order.
std::vector<CycInt> walsh_spectrum(const FunctionTable& g);

// |W_g(a)|^2 == q for all a.
bool is_bent(const FunctionTable& g);

struct SpectralProfile {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::vector<CycInt> walsh;
  std::vector<int> sign;
  std::vector<Residue> dual;
};

// Decomposes every Walsh value of a bent function into (sign, dual).
// Throws DomainError if g is not bent, InternalConsistencyError if a bent
// value fails to decompose.
SpectralProfile spectral_profile(const FunctionTable& g);

// The common sign of all Walsh values, if there is one.
std::optional<int> is_weakly_regular(const SpectralProfile& profile);
std::optional<int> is_weakly_regular(const FunctionTable& g);

enum class DistributionShape {
  kEvenPlus,
  kEvenMinus,
  kOddPlus,
  kOddMinus,
  kConstant,
  kBalanced,
  kOther,
};

struct DistributionClass {
  DistributionShape shape = DistributionShape::kOther;
  // The index s of the shape; for kConstant the value taken.
  std::uint32_t s = 0;

  bool positive() const {
    return shape == DistributionShape::kEvenPlus ||
           shape == DistributionShape::kOddPlus;
  }
  bool negative() const {
    return shape == DistributionShape::kEvenMinus ||
           shape == DistributionShape::kOddMinus;
  }
  std::string to_string() const;

  friend bool operator==(const DistributionClass&,
                         const DistributionClass&) = default;
  friend auto operator<=>(const DistributionClass&,
                          const DistributionClass&) = default;
};

// Matches a value distribution against the bent shapes of its parity of m:
//   m even:  n_s = p^{m-1} +- (p-1) p^{m/2-1},  n_i = p^{m-1} -+ p^{m/2-1}
//   m odd:   n_i = p^{m-1} +- (i+s / p) p^{(m-1)/2}
// Checks run in the order constant, balanced, plus s = 0..p-1, minus
// s = 0..p-1, so degenerate overlaps resolve to the first match.
class DistributionClassifier {
 public:
  DistributionClassifier(std::uint32_t p, std::uint32_t m);

  DistributionClass classify(std::span<const std::uint64_t> counts) const;
  // The distribution a given shape prescribes; empty for kOther.
  std::vector<std::uint64_t> expected(const DistributionClass& c) const;

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }

 private:
  std::uint32_t p_;
  std::uint32_t m_;
  std::uint64_t q_;
  // Shapes in match order, with their count vectors.
  std::vector<std::pair<DistributionClass, std::vector<std::uint64_t>>> shapes_;
};

DistributionClass classify_value_distribution(const ValueDist& d,
                                              std::uint32_t p,
                                              std::uint32_t m);

// Spectral data of the components Pi_a(x) = Tr(a Pi(x)), a != 0.
struct PNSpectralReport {
  bool weakly_regular_pn = false;
  // Indexed by a; entry 0 unused. signs[a] is the sign of Pi_a at 0.
  std::vector<int> signs;
  std::vector<Residue> dual_at_zero;
  bool dual_at_zero_surjective = false;
  std::uint64_t plus_signs = 0;
  std::uint64_t minus_signs = 0;
  // sum_{a != 0} signs[a] xi^{dual_at_zero[a]}.
  CycInt sign_sum;
  // sum_{a != 0} W_{Pi_a}(0); equals q |Pi^{-1}(0)| - q.
  CycInt walsh_zero_sum;
};

PNSpectralReport pn_spectral_report(const FunctionTable& pi);

}  // namespace pncodes
