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
#include <vector>

#include "pncodes/codes.hpp"

namespace pncodes {

// (alpha, beta) in F_p^* x F_p with
//   (a1, b1) * (a2, b2) = (a1 a2, a1 b2 + b1).
struct GroupElement {
  Residue alpha = 1;
  Residue beta = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement compose(const GroupElement& g, const GroupElement& h,
                     std::uint32_t p);
GroupElement inverse(const GroupElement& g, std::uint32_t p);
// All p(p-1) elements, alpha-major.
std::vector<GroupElement> group_elements(std::uint32_t p);

// (alpha, beta) . (a, b, t) = (alpha a, alpha b, alpha t + beta).
CodeIndex act(const Field& field, const GroupElement& g, const CodeIndex& x);

struct Orbit {
  // Linear indices (Code::linear), ascending.
  std::vector<std::uint64_t> members;
};

// Orbits of the a != 0 stratum of a CBar code, ordered by smallest member.
std::vector<Orbit> orbits(const Code& code);

enum class Stratum { kNonzeroA, kZeroA };

// True iff no non-identity element fixes an index of the stratum.
bool verify_free(const Code& code, Stratum stratum = Stratum::kNonzeroA);
std::uint64_t stabilizer_size(const Code& code, const CodeIndex& x);

struct TransportViolation {
  CodeIndex index;
  GroupElement g;
  CodewordType expected;
  CodewordType observed;
};

struct OrbitReport {
  std::uint64_t orbit_count = 0;
  // Common orbit size, or 0 if sizes differ.
  std::uint64_t orbit_size = 0;
  std::uint64_t stratum_size = 0;
  bool free = false;
  // m even only.
  std::optional<std::uint64_t> positive_orbits;
  std::optional<std::uint64_t> negative_orbits;
  std::optional<bool> orbits_sign_uniform;
  std::optional<bool> per_orbit_s_counts_ok;
  // m odd only.
  std::optional<bool> every_orbit_has_zero_plus;
  // Per-orbit censuses add up to the global census on the stratum.
  bool census_consistent = false;
  std::uint64_t violation_count = 0;
  // The first few violations, in index order.
  std::vector<TransportViolation> violations;
};

// Re-classifies the image of every stratum index under every group element
// and checks the transport law of the parity of m:
//   m odd:  s^e  ->  (alpha s - beta)^{e (alpha^{-1} / p)}
//   m even: s^e  ->  (alpha s + beta)^e
// `types` may carry a classify_all result to avoid recomputing it.
OrbitReport verify_transport(const Code& code,
                             const std::vector<CodewordType>* types = nullptr);

}  // namespace pncodes
