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

// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 0 only
// if every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pncodes/action.hpp"
#include "pncodes/cli.hpp"
#include "pncodes/codes.hpp"
#include "pncodes/oracle.hpp"
#include "pncodes/spectra.hpp"
#include "support.hpp"

namespace {

using namespace pncodes;
using Counts = std::map<std::uint64_t, std::uint64_t>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& name, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    out.ok = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s", secs);
  std::cout << (out.ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << name << " ("
            << timing;
  if (limit_seconds > 0) std::cout << ", limit " << limit_seconds << " s";
  std::cout << ")";
  if (!out.detail.empty()) std::cout << " -- " << out.detail;
  std::cout << std::endl;
  failures += !out.ok;
}

std::string show(const WeightDist& d) {
  std::ostringstream s;
  s << '{';
  bool first = true;
  for (const auto& [w, c] : d.counts) {
    s << (first ? "" : ", ") << w << ':' << c;
    first = false;
  }
  s << '}';
  return s.str();
}

// Enumerated distributions of criteria 1-6, reused by 7 and 11.
struct Instance {
  std::string label;
  FunctionTable pi;
  CodeVariant variant;
  WeightDist observed;
};
std::vector<Instance> instances;

void record(const std::string& label, const FunctionTable& pi, CodeVariant v,
            const WeightDist& d) {
  instances.push_back({label, pi, v, d});
}

Outcome exact(const std::string& label, const FunctionTable& pi, CodeVariant v,
              const Counts& golden, const WeightDist& predicted) {
  Outcome o;
  const WeightDist d = weight_distribution(Code(v, pi));
  record(label, pi, v, d);
  o.require(d.counts == golden, "enumerated " + show(d));
  o.require(predicted.counts == golden, "predicted " + show(predicted));
  return o;
}

Outcome catalog_m5(const PNSpec& spec, const char* label) {
  Outcome o;
  const Field f = Field::create(3, 5);
  const FunctionTable pi = compile(spec, f);
  const auto violation = find_pn_violation(pi);
  o.require(!violation, "not planar");
  const WeightDist d = weight_distribution(Code(CodeVariant::kCBar, pi));
  record(label, pi, CodeVariant::kCBar, d);
  const WeightDist want = predict_cbar(3, 5).weights;
  o.require(d == want, "enumerated " + show(d) + " predicted " + show(want));
  o.require(d.min_distance() == 2 * 81 - 9, "minimum distance " + std::to_string(d.min_distance()));
  return o;
}

}  // namespace

int main() {
  const Field f9 = Field::create(3, 2);
  const Field f27 = Field::create(3, 3);
  const Field f125 = Field::create(5, 3);

  criterion(1, "long code, x^2 over F_27", 1.0, [&] {
    return exact("x^2 F_27", compile(PNSpec::square(), f27), CodeVariant::kCBar,
                 {{0, 1}, {15, 702}, {18, 780}, {21, 702}, {27, 2}}, predict_cbar(3, 3).weights);
  });

  criterion(2, "long code, x^2 over F_9", 1.0, [&] {
    return exact("x^2 F_9", compile(PNSpec::square(), f9), CodeVariant::kCBar,
                 {{0, 1}, {4, 36}, {5, 72}, {6, 24}, {7, 72}, {8, 36}, {9, 2}},
                 predict_cbar(3, 2).weights);
  });

  criterion(3, "short code, x^2 over F_27", 1.0, [&] {
    Outcome o = exact("x^2 F_27", compile(PNSpec::square(), f27), CodeVariant::kC,
                      {{0, 1}, {15, 312}, {18, 260}, {21, 156}}, predict_c(3, 3).weights);
    o.require(instances.back().observed.total() == 729, "total");
    return o;
  });

  criterion(4, "long code, x^2 over F_125", 10.0, [&] {
    Outcome o = exact("x^2 F_125", compile(PNSpec::square(), f125), CodeVariant::kCBar,
                      {{0, 1}, {95, 31000}, {100, 16120}, {105, 31000}, {125, 4}},
                      predict_cbar(5, 3).weights);
    o.require(instances.back().observed.min_distance() == 95, "minimum distance");
    return o;
  });

  criterion(5, "x^14 over F_243", 60.0,
            [&] { return catalog_m5(PNSpec::coulter_matthews(3), "x^14 F_243"); });

  criterion(6, "x^10 - u x^6 - u^2 x^2 over F_243", 60.0, [&] {
    const Field f = Field::create(3, 5);
    return catalog_m5(PNSpec::ding_yuan(f.generator()), "ding-yuan F_243");
  });

  criterion(7, "type census on criteria 1-6", 0, [&] {
    Outcome o;
    for (const auto& inst : instances) {
      if (inst.variant != CodeVariant::kCBar) continue;
      const Field& f = inst.pi.field();
      const TypeCensus got = type_census(Code(CodeVariant::kCBar, inst.pi));
      o.require(got == predict_type_census(f.p(), f.m()).census, inst.label);
    }
    return o;
  });

  criterion(8, "group action on p=3, m=2,3", 0, [&] {
    Outcome o;
    for (std::uint32_t m : {2u, 3u}) {
      const Field f = Field::create(3, m);
      const Code code(CodeVariant::kCBar, compile(PNSpec::square(), f));
      const OrbitReport r = verify_transport(code);
      const std::uint64_t want = f.q() * (f.q() - 1) / 2;
      const std::string tag = "m=" + std::to_string(m) + ": ";
      o.require(r.free && verify_free(code), tag + "not free");
      o.require(r.orbit_count == want, tag + "orbit count " + std::to_string(r.orbit_count));
      o.require(orbits(code).size() == want, tag + "orbit list");
      o.require(r.orbit_size == 6, tag + "orbit size");
      o.require(r.violation_count == 0, tag + std::to_string(r.violation_count) + " violations");
      o.require(r.census_consistent, tag + "census");
      if (m == 2) {
        o.require(r.positive_orbits == 18u && r.negative_orbits == 18u, tag + "k+/k-");
        o.require(r.orbits_sign_uniform == true, tag + "sign uniform");
      }
    }
    return o;
  });

  criterion(9, "spectral side conditions, x^2 over F_9 and F_81", 0, [&] {
    Outcome o;
    for (std::uint32_t m : {2u, 4u}) {
      const Field f = Field::create(3, m);
      const PNSpectralReport r = pn_spectral_report(compile(PNSpec::square(), f));
      const std::string tag = "m=" + std::to_string(m) + ": ";
      o.require(r.weakly_regular_pn, tag + "weakly regular");
      bool zero = true;
      for (std::uint32_t a = 1; a < f.q(); ++a) zero = zero && r.dual_at_zero[a] == 0;
      o.require(zero && !r.dual_at_zero_surjective, tag + "dual at zero");
      o.require(r.sign_sum.is_zero(), tag + "sign sum " + r.sign_sum.to_string());
      o.require(r.plus_signs == (f.q() - 1) / 2, tag + "plus signs");
    }
    return o;
  });

  criterion(10, "dual distances", 30.0, [&] {
    Outcome o;
    const Code cbar(CodeVariant::kCBar, compile(PNSpec::square(), f9));
    const auto d = dual_min_distance(cbar, 6);
    o.require(d == 5u, "long code m=2");
    const auto rows = ref::generator_rows(cbar.pi(), true);
    o.require(ref::dual_distance_by_subsets(rows, 3, 5) == 5, "subset oracle");
    for (std::uint32_t m : {2u, 3u}) {
      const Code c(CodeVariant::kC, compile(PNSpec::square(), Field::create(3, m)));
      o.require(!dual_min_distance(c, 2).has_value(), "short code m=" + std::to_string(m));
    }
    return o;
  });

  criterion(11, "moment residuals on criteria 1-6", 0, [&] {
    Outcome o;
    for (const auto& inst : instances) {
      const Code code(inst.variant, inst.pi);
      const std::uint32_t p = inst.pi.field().p();
      const std::uint32_t k = code.claimed_dimension();
      std::vector<Int128> res;
      unsigned attested = 0;
      if (inst.variant == CodeVariant::kC) {
        attested = dual_min_distance(code, 2) ? 0 : 3;
        res = pless_check(inst.observed, code.length(), k, p, 2, attested);
      } else {
        attested = dual_min_distance(code, 3) ? 0 : 4;
        res = pless_check(inst.observed, code.length(), k, p, p == 3 ? 3 : 0, attested);
        // No quoted system beyond moment 0 for p != 3: the binomial form.
        for (unsigned r = 1; p != 3 && r < attested; ++r) {
          res.push_back(ref::binomial_moment_residual(inst.observed, code.length(), k, p, r));
        }
      }
      for (std::size_t i = 0; i < res.size(); ++i) {
        o.require(res[i] == 0, inst.label + " " + variant_name(inst.variant) + " moment " +
                                   std::to_string(i) + " residual " + int128_to_string(res[i]));
      }
      o.require(res.size() >= (inst.variant == CodeVariant::kC || p != 3 ? 3u : 4u),
                inst.label + " too few moments");
    }
    return o;
  });

  criterion(12, "negative controls", 0, [&] {
    Outcome o;
    const FunctionTable cube = compile(parse_expression("x^3", {}, f9), f9);
    const auto v = find_pn_violation(cube);
    o.require(v.has_value() && v->x1 != v->x2, "x^3 witness");

    const FunctionTable sq = compile(PNSpec::square(), f27);
    const FunctionTable bad = sq.with_value(1, f27.add(sq[1], 1));
    bool some_not_bent = false;
    for (std::uint32_t a = 1; a < f27.q(); ++a) {
      some_not_bent = some_not_bent || !is_bent(component_function(bad, a, 0, 0));
    }
    o.require(some_not_bent, "perturbed table still bent");

    WeightDist d = predict_cbar(3, 2).weights;
    ++d.counts[4];
    o.require(pless_check(d, 9, 5, 3, 0, 5)[0] != 0, "moment 0 residual");

    std::ostringstream out, err;
    const int code = run_cli({"pncodes", "analyze", "--p", "3", "--m", "2", "--fn", "square",
                              "--debug-perturb-weight-count"},
                             out, err);
    o.require(code == kExitVerificationFailed, "exit code " + std::to_string(code));
    return o;
  });

  criterion(13, "property suites", 0, [&] {
    Outcome o;
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
      o.require(ref::cyclotomic_fuzz_failures(p, 10000, 0xACCE55 + p) == 0,
                "cyclotomic p=" + std::to_string(p));
    }
    for (auto [p, m] : ref::small_fields()) {
      o.require(ref::parseval_failures(Field::create(p, m), 100, 1000 * p + m) == 0,
                "parseval " + std::to_string(p) + "^" + std::to_string(m));
    }
    for (const auto& inst : instances) {
      if (inst.variant != CodeVariant::kCBar) continue;
      o.require(ref::component_identity_failures(inst.pi) == 0, "fiber identities " + inst.label);
    }
    for (std::uint32_t p : {3u, 5u, 7u}) {
      for (std::uint32_t m = 1; m <= 4; ++m) {
        o.require(ref::trace_balanced(Field::create(p, m)),
                  "trace " + std::to_string(p) + "^" + std::to_string(m));
      }
    }
    return o;
  });

  return failures == 0 ? 0 : 1;
}
