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

#include <string>

#include "json.hpp"
#include "pncodes/action.hpp"
#include "pncodes/codes.hpp"
#include "pncodes/cyclotomic.hpp"
#include "pncodes/field.hpp"
#include "pncodes/functions.hpp"
#include "pncodes/oracle.hpp"
#include "pncodes/spectra.hpp"

namespace pncodes {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json to_json(const FieldSpec& spec);
// Power-basis coefficients as an array.
Json to_json(const CycInt& v);
Json to_json(const PNSpec& spec);
Json to_json(const SpectralProfile& profile);
// Object keyed by weight, ascending.
Json to_json(const WeightDist& dist);
Json to_json(const TypeCensus& census);
Json to_json(const OrbitReport& report);
Json to_json(const HypothesisResult& h);
// The versioned report document.
Json to_json(const VerificationReport& report);

// Rows variant,weight,predicted,observed over the union of weights.
std::string report_weights_csv(const VerificationReport& report);

}  // namespace pncodes
