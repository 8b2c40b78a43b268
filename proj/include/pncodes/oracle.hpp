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
#include <string>
#include <vector>

#include "json.hpp"
#include "pncodes/action.hpp"
#include "pncodes/codes.hpp"
#include "pncodes/functions.hpp"
#include "pncodes/spectra.hpp"

namespace pncodes {

using Int128 = __int128;
std::string int128_to_string(Int128 v);

struct HypothesisResult {
  std::string name;
  bool holds = false;
  // Counterexample or measured value when the hypothesis fails.
  std::string witness;
};

struct Prediction {
  // "cbar-odd", "cbar-even", "c-odd", "c-even" or "type-census".
  std::string source;
  // False when the instance does not meet the hypotheses of the formula.
  bool proven = true;
  std::vector<HypothesisResult> applicability;
  WeightDist weights;
  TypeCensus census;
};

// Closed-form weight distribution of the length-q code.
//   m odd:  A_{(p-1)p^{m-1} -+ p^{(m-1)/2}} = (p-1) p^m (p^m-1) / 2
//           A_{(p-1)p^{m-1}}               = (p^m-1)(p^m+p)
//           A_{p^m}                        = p-1
//   m even: six nonzero weights around (p-1)p^{m-1}, offsets p^{m/2-1}.
Prediction predict_cbar(std::uint32_t p, std::uint32_t m);
// Closed-form weight distribution of the length-(q-1) code.
Prediction predict_c(std::uint32_t p, std::uint32_t m);
// Codeword types of the length-q code: constants 1 each, balanced
// p^{m+1} - p, every s+ and s- p^m (p^m - 1) / 2.
Prediction predict_type_census(std::uint32_t p, std::uint32_t m);

// Hypotheses evaluated by brute force. Names:
//   perfect_nonlinear, pi_zero_at_zero, scaling, single_zero_preimage,
//   zero_preimage_is_origin, p_is_3, weakly_regular_pn,
//   dual_at_zero_not_surjective, condition_b
// The spectral entries are only present when `spectral` is given.
std::vector<HypothesisResult> check_hypotheses(
    const FunctionTable& pi, const PNSpectralReport* spectral = nullptr);

const HypothesisResult* find_hypothesis(const std::vector<HypothesisResult>& hs,
                                        const std::string& name);

// Whether the closed forms are proven for the instance.
bool cbar_prediction_applies(const std::vector<HypothesisResult>& hs,
                             std::uint32_t p, std::uint32_t m);
bool c_prediction_applies(const std::vector<HypothesisResult>& hs,
                          std::uint32_t p, std::uint32_t m);

// Residuals sum_j j^r A_j - RHS for r = 0..moments. Moment 0 compares with
// p^k. Higher moments use the identities
//   length-(q-1) code, k = 2m:
//     sum j A_j   = p^{2m-1} (p-1)(p^m-1)
//     sum j^2 A_j = p^{2m-2} (p-1)(p^m-1)(p + (p-1)(p^m-2))
//   length-q code, p = 3, k = 2m+1:
//     sum j A_j   = 2 3^{3m}
//     sum j^2 A_j = 2 3^{3m-1} (2 3^m + 1)
//     sum j^3 A_j = 2 3^{3m-2} (4 3^{2m} + 2 3^{m+1} - 1)
// Moment r needs dual distance > r: throws UsageError when
// moments >= attested_dual_distance, and when no identity is known for
// the (n, k, p) shape.
std::vector<Int128> pless_check(const WeightDist& dist, std::uint64_t n,
                                std::uint32_t k, std::uint32_t p,
                                unsigned moments,
                                unsigned attested_dual_distance);

enum class CheckStatus { kPass, kFail, kNotApplicable };
std::string status_name(CheckStatus s);

struct Check {
  std::string name;
  // "c", "cbar" or empty for instance-wide checks.
  std::string variant;
  CheckStatus status = CheckStatus::kNotApplicable;
  nlohmann::ordered_json predicted;
  nlohmann::ordered_json observed;
  std::string note;
};

struct VerificationReport {
  nlohmann::ordered_json instance;
  std::vector<HypothesisResult> hypotheses;
  std::vector<Check> checks;
  // Enumerated weight distributions by variant name.
  std::map<std::string, WeightDist> observed_weights;
  std::map<std::string, WeightDist> predicted_weights;
  std::optional<TypeCensus> census;
  std::optional<OrbitReport> orbit_report;

  // No check failed; not-applicable entries do not count against it.
  bool overall() const;
  const Check* find(const std::string& name, const std::string& variant = "") const;
};

struct VerifyOptions {
  std::vector<CodeVariant> variants = {CodeVariant::kC, CodeVariant::kCBar};
  // Skips the orbit pass and the larger dual-distance searches.
  bool fast = false;
  // Debug aid: adds one to the count of the smallest nonzero enumerated
  // weight before any comparison.
  bool perturb_weight_count = false;
};

VerificationReport verify_instance(const PNSpec& spec, const Field& field,
                                   const VerifyOptions& options = {});
VerificationReport verify_instance(const FunctionTable& pi,
                                   nlohmann::ordered_json function_descriptor,
                                   const VerifyOptions& options = {});

}  // namespace pncodes
