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

#include "pncodes/serialize.hpp"

#include <set>
#include <sstream>

namespace pncodes {

Json to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}};
}

Json to_json(const CycInt& v) {
  Json out = Json::array();
  for (auto c : v.coeffs()) out.push_back(c);
  return out;
}

Json to_json(const PNSpec& spec) {
  Json out{{"kind", spec.kind_name()}, {"description", spec.describe()}};
  switch (spec.kind) {
    case PNKind::kDoMonomial:
    case PNKind::kCoulterMatthews:
      out["k"] = spec.k;
      break;
    case PNKind::kDingYuan:
      if (spec.u) out["u"] = spec.u->to_string();
      break;
    case PNKind::kExpression: {
      Json bindings = Json::object();
      for (const auto& [name, value] : spec.params) bindings[name] = value.to_string();
      out["bindings"] = bindings;
      break;
    }
    case PNKind::kSquare:
      break;
  }
  return out;
}

Json to_json(const SpectralProfile& profile) {
  Json walsh = Json::array();
  for (const auto& w : profile.walsh) walsh.push_back(to_json(w));
  return Json{{"p", profile.p},
              {"m", profile.m},
              {"walsh", walsh},
              {"sign", profile.sign},
              {"dual", profile.dual}};
}

Json to_json(const WeightDist& dist) {
  Json out = Json::object();
  for (const auto& [w, c] : dist.counts) out[std::to_string(w)] = c;
  return out;
}

Json to_json(const TypeCensus& census) {
  Json out = Json::object();
  for (const auto& [t, c] : census) out[t.to_string()] = c;
  return out;
}

Json to_json(const OrbitReport& report) {
  Json out{{"orbit_count", report.orbit_count},
           {"orbit_size", report.orbit_size},
           {"stratum_size", report.stratum_size},
           {"free", report.free}};
  if (report.positive_orbits) out["positive_orbits"] = *report.positive_orbits;
  if (report.negative_orbits) out["negative_orbits"] = *report.negative_orbits;
  if (report.every_orbit_has_zero_plus) {
    out["every_orbit_has_zero_plus"] = *report.every_orbit_has_zero_plus;
  }
  out["census_consistent"] = report.census_consistent;
  out["transport_violation_count"] = report.violation_count;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(Json{{"index", {v.index.a, v.index.b, v.index.t}},
                              {"g", {v.g.alpha, v.g.beta}},
                              {"expected", v.expected.to_string()},
                              {"observed", v.observed.to_string()}});
  }
  out["transport_violations"] = violations;
  return out;
}

Json to_json(const HypothesisResult& h) {
  Json out{{"name", h.name}, {"holds", h.holds}};
  if (!h.witness.empty()) out["witness"] = h.witness;
  return out;
}

Json to_json(const VerificationReport& report) {
  Json out{{"schema", kReportSchema}, {"instance", report.instance}};
  Json hs = Json::array();
  for (const auto& h : report.hypotheses) hs.push_back(to_json(h));
  out["hypotheses"] = hs;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}};
    if (!c.variant.empty()) entry["variant"] = c.variant;
    entry["status"] = status_name(c.status);
    entry["predicted"] = c.predicted;
    entry["observed"] = c.observed;
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(entry);
  }
  out["checks"] = checks;
  Json weights = Json::object();
  for (const auto& [variant, dist] : report.observed_weights) {
    weights[variant] = to_json(dist);
  }
  out["weight_distributions"] = weights;
  if (report.census) out["type_census"] = to_json(*report.census);
  if (report.orbit_report) out["orbits"] = to_json(*report.orbit_report);
  out["overall"] = report.overall() ? "pass" : "fail";
  return out;
}

std::string report_weights_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "variant,weight,predicted,observed\n";
  for (const auto& [variant, observed] : report.observed_weights) {
    const auto it = report.predicted_weights.find(variant);
    const WeightDist empty;
    const WeightDist& predicted = it == report.predicted_weights.end() ? empty : it->second;
    std::set<std::uint64_t> weights;
    for (const auto& [w, c] : observed.counts) weights.insert(w);
    for (const auto& [w, c] : predicted.counts) weights.insert(w);
    for (auto w : weights) {
      auto lookup = [w](const WeightDist& d) {
        const auto f = d.counts.find(w);
        return f == d.counts.end() ? std::uint64_t{0} : f->second;
      };
      out << variant << ',' << w << ',' << lookup(predicted) << ',' << lookup(observed)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace pncodes
