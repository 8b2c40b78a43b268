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

#include "pncodes/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "pncodes/errors.hpp"
#include "pncodes/parallel.hpp"
#include "pncodes/serialize.hpp"

namespace pncodes {

namespace {

Int128 pow128(Int128 base, std::uint32_t e) {
  Int128 r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

std::uint64_t narrow(Int128 v) {
  if (v < 0 || v > static_cast<Int128>(std::numeric_limits<std::uint64_t>::max())) {
    throw DomainError("closed-form count does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

void require_params(std::uint32_t p, std::uint32_t m) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw DomainError("p must be an odd prime");
  if (m < 1) throw DomainError("m must be at least 1");
}

void put(WeightDist& d, Int128 weight, Int128 count) {
  if (count != 0) d.counts[narrow(weight)] += narrow(count);
}

}  // namespace

std::string int128_to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string digits;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// ---- predictions ----

Prediction predict_cbar(std::uint32_t p, std::uint32_t m) {
  require_params(p, m);
  const Int128 P = p;
  const Int128 q = pow128(P, m);
  const Int128 base = (P - 1) * pow128(P, m - 1);
  Prediction out;
  out.weights.counts[0] = 1;
  if (m % 2 == 1) {
    out.source = "cbar-odd";
    const Int128 r = pow128(P, (m - 1) / 2);
    const Int128 side = (P - 1) * q * (q - 1) / 2;
    put(out.weights, base - r, side);
    put(out.weights, base, (q - 1) * (q + P));
    put(out.weights, base + r, side);
  } else {
    out.source = "cbar-even";
    const Int128 h = pow128(P, m / 2 - 1);
    put(out.weights, (P - 1) * (pow128(P, m - 1) - h), q * (q - 1) / 2);
    put(out.weights, base - h, q * (q - 1) * (P - 1) / 2);
    put(out.weights, base, P * q - P);
    put(out.weights, base + h, q * (q - 1) * (P - 1) / 2);
    put(out.weights, (P - 1) * (pow128(P, m - 1) + h), q * (q - 1) / 2);
  }
  put(out.weights, q, P - 1);
  return out;
}

Prediction predict_c(std::uint32_t p, std::uint32_t m) {
  require_params(p, m);
  const Int128 P = p;
  const Int128 q = pow128(P, m);
  const Int128 top = pow128(P, m - 1);
  const Int128 base = (P - 1) * top;
  Prediction out;
  out.weights.counts[0] = 1;
  if (m % 2 == 1) {
    out.source = "c-odd";
    const Int128 r = pow128(P, (m - 1) / 2);
    put(out.weights, base - r, (P - 1) * (q - 1) * (top + r) / 2);
    put(out.weights, base, (top + 1) * (q - 1));
    put(out.weights, base + r, (P - 1) * (q - 1) * (top - r) / 2);
  } else {
    out.source = "c-even";
    const Int128 h = pow128(P, m / 2 - 1);
    const Int128 half = pow128(P, m / 2);
    put(out.weights, (P - 1) * (top - h), (q - 1) / 2 * (top + half - h));
    put(out.weights, base - h, (q - 1) / 2 * (P - 1) * (top + h));
    put(out.weights, base, q - 1);
    put(out.weights, base + h, (q - 1) / 2 * (P - 1) * (top - h));
    put(out.weights, (P - 1) * (top + h), (q - 1) / 2 * (top - half + h));
  }
  return out;
}

Prediction predict_type_census(std::uint32_t p, std::uint32_t m) {
  require_params(p, m);
  const Int128 q = pow128(p, m);
  Prediction out;
  out.source = "type-census";
  using Kind = CodewordType::Kind;
  for (std::uint32_t i = 0; i < p; ++i) out.census[{Kind::kConstant, i}] = 1;
  out.census[{Kind::kBalanced, 0}] = narrow(q * p - p);
  for (std::uint32_t s = 0; s < p; ++s) {
    out.census[{Kind::kSPlus, s}] = narrow(q * (q - 1) / 2);
    out.census[{Kind::kSMinus, s}] = narrow(q * (q - 1) / 2);
  }
  return out;
}

// ---- hypotheses ----

std::vector<HypothesisResult> check_hypotheses(const FunctionTable& pi,
                                               const PNSpectralReport* spectral) {
  const Field& field = pi.field();
  const std::uint32_t q = field.q();
  const std::uint32_t p = field.p();
  std::vector<HypothesisResult> out;

  HypothesisResult pn{"perfect_nonlinear", true, ""};
  if (auto v = find_pn_violation(pi)) {
    pn.holds = false;
    pn.witness = "D_a Pi(x1) = D_a Pi(x2) for a=(" + field.element(v->shift).to_string() +
                 "), x1=(" + field.element(v->x1).to_string() + "), x2=(" +
                 field.element(v->x2).to_string() + ")";
  }
  out.push_back(pn);

  HypothesisResult zero{"pi_zero_at_zero", pi[0] == 0, ""};
  if (!zero.holds) zero.witness = "Pi(0) = (" + field.element(pi[0]).to_string() + ")";
  out.push_back(zero);

  HypothesisResult scaling{"scaling", true, ""};
  for (Residue c = 2; c < p && scaling.holds; ++c) {
    const std::uint32_t ce = field.from_residue(c);
    for (std::uint32_t x = 1; x < q; ++x) {
      if (pi[field.mul(ce, x)] == field.mul(ce, pi[x])) {
        scaling.holds = false;
        scaling.witness = "Pi(c x) = c Pi(x) at x=(" + field.element(x).to_string() +
                          "), c=" + std::to_string(c);
        break;
      }
    }
  }
  out.push_back(scaling);

  const std::uint64_t zeros = zero_preimage_count(pi);
  HypothesisResult single{"single_zero_preimage", zeros == 1, ""};
  if (!single.holds) single.witness = "|Pi^-1(0)| = " + std::to_string(zeros);
  out.push_back(single);

  HypothesisResult origin{"zero_preimage_is_origin", zeros == 1 && pi[0] == 0, ""};
  if (!origin.holds) {
    origin.witness = "|Pi^-1(0)| = " + std::to_string(zeros) +
                     ", Pi(0) = (" + field.element(pi[0]).to_string() + ")";
  }
  out.push_back(origin);

  out.push_back({"p_is_3", p == 3, p == 3 ? "" : "p = " + std::to_string(p)});

  if (spectral != nullptr) {
    HypothesisResult wr{"weakly_regular_pn", spectral->weakly_regular_pn, ""};
    if (!wr.holds) wr.witness = "some component Tr(a Pi) has Walsh values of both signs";
    out.push_back(wr);

    HypothesisResult ns{"dual_at_zero_not_surjective",
                        !spectral->dual_at_zero_surjective, ""};
    if (!ns.holds) ns.witness = "a -> dual of Tr(a Pi) at 0 hits every residue";
    out.push_back(ns);

    HypothesisResult b{"condition_b", single.holds && wr.holds && ns.holds, ""};
    if (!b.holds) {
      b.witness = !single.holds ? single.witness
                  : !wr.holds   ? wr.witness
                                : ns.witness;
    }
    out.push_back(b);
  }
  return out;
}

const HypothesisResult* find_hypothesis(const std::vector<HypothesisResult>& hs,
                                        const std::string& name) {
  for (const auto& h : hs) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

namespace {

bool holds(const std::vector<HypothesisResult>& hs, const std::string& name) {
  const auto* h = find_hypothesis(hs, name);
  return h != nullptr && h->holds;
}

}  // namespace

bool cbar_prediction_applies(const std::vector<HypothesisResult>& hs,
                             std::uint32_t p, std::uint32_t m) {
  if (!holds(hs, "perfect_nonlinear")) return false;
  if (m % 2 == 1) return true;
  return p == 3 || holds(hs, "condition_b");
}

bool c_prediction_applies(const std::vector<HypothesisResult>& hs,
                          std::uint32_t p, std::uint32_t m) {
  if (!holds(hs, "perfect_nonlinear") || !holds(hs, "pi_zero_at_zero") ||
      !holds(hs, "scaling")) {
    return false;
  }
  if (m % 2 == 1 || p == 3) return true;
  return holds(hs, "condition_b") && holds(hs, "zero_preimage_is_origin");
}

// ---- Pless moments ----

std::vector<Int128> pless_check(const WeightDist& dist, std::uint64_t n,
                                std::uint32_t k, std::uint32_t p,
                                unsigned moments,
                                unsigned attested_dual_distance) {
  if (moments > 4) throw UsageError("at most four moments are supported");
  if (moments >= attested_dual_distance) {
    throw UsageError("moment " + std::to_string(moments) +
                     " needs dual distance > " + std::to_string(moments) +
                     "; attested only " + std::to_string(attested_dual_distance));
  }
  const Int128 P = p;
  std::vector<Int128> rhs{pow128(P, k)};
  if (moments >= 1) {
    // Identify the code shape from (n, k): k = 2m with n = p^m - 1, or
    // k = 2m + 1 with n = p^m.
    const std::uint32_t m = k / 2;
    const Int128 q = pow128(P, m);
    const bool short_shape = k % 2 == 0 && q == static_cast<Int128>(n) + 1;
    const bool full_shape = p == 3 && k % 2 == 1 && q == static_cast<Int128>(n);
    if (short_shape && moments <= 2) {
      rhs.push_back(pow128(P, 2 * m - 1) * (P - 1) * (q - 1));
      if (moments >= 2) {
        rhs.push_back(pow128(P, 2 * m - 2) * (P - 1) * (q - 1) *
                      (P + (P - 1) * (q - 2)));
      }
    } else if (full_shape && moments <= 3) {
      rhs.push_back(2 * pow128(3, 3 * m));
      if (moments >= 2) rhs.push_back(2 * pow128(3, 3 * m - 1) * (2 * q + 1));
      if (moments >= 3) {
        rhs.push_back(2 * pow128(3, 3 * m - 2) *
                      (4 * pow128(3, 2 * m) + 2 * pow128(3, m + 1) - 1));
      }
    } else {
      throw UsageError("no moment identity known for n=" + std::to_string(n) +
                       ", k=" + std::to_string(k) + ", p=" + std::to_string(p) +
                       " up to moment " + std::to_string(moments));
    }
  }
  std::vector<Int128> residuals;
  for (unsigned r = 0; r <= moments; ++r) {
    Int128 lhs = 0;
    for (const auto& [w, c] : dist.counts) lhs += pow128(w, r) * static_cast<Int128>(c);
    residuals.push_back(lhs - rhs[r]);
  }
  return residuals;
}

// ---- verification ----

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kNotApplicable:
      return "not_applicable";
  }
  return "fail";
}

bool VerificationReport::overall() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::kFail;
  });
}

const Check* VerificationReport::find(const std::string& name,
                                      const std::string& variant) const {
  for (const auto& c : checks) {
    if (c.name == name && c.variant == variant) return &c;
  }
  return nullptr;
}

namespace {

constexpr const char* kUnproven = "unproven for this instance";

CheckStatus judged(bool applicable, bool ok) {
  if (!applicable) return CheckStatus::kNotApplicable;
  return ok ? CheckStatus::kPass : CheckStatus::kFail;
}

Json residuals_json(const std::vector<Int128>& rs) {
  Json out = Json::array();
  for (auto r : rs) out.push_back(int128_to_string(r));
  return out;
}

void perturb(WeightDist& d) {
  for (auto& [w, c] : d.counts) {
    if (w != 0) {
      ++c;
      return;
    }
  }
}

// Fiber identities on every component Tr(a Pi(x) + b x), a != 0.
std::uint64_t fiber_identity_failures(const FunctionTable& pi) {
  const Field& field = pi.field();
  const std::uint32_t q = field.q();
  const std::uint32_t p = field.p();
  std::vector<std::uint64_t> failures(q, 0);
  const auto traces = field.trace_table();
  parallel_for(q - 1, [&](std::size_t i) {
    const auto a = static_cast<std::uint32_t>(i + 1);
    std::vector<std::uint8_t> u(q), row(q);
    for (std::uint32_t x = 0; x < q; ++x) u[x] = traces[field.mul(a, pi[x])];
    ValueDist d{std::vector<std::uint64_t>(p)};
    for (std::uint32_t b = 0; b < q; ++b) {
      trace_row(field, b, row);
      std::fill(d.counts.begin(), d.counts.end(), 0);
      for (std::uint32_t x = 0; x < q; ++x) ++d.counts[(u[x] + row[x]) % p];
      if (!lemma1_check(d, q)) ++failures[a];
    }
  });
  std::uint64_t total = 0;
  for (auto f : failures) total += f;
  return total;
}

struct Context {
  const FunctionTable& pi;
  const Field& field;
  std::uint32_t p;
  std::uint32_t m;
  std::uint64_t q;
  const VerifyOptions& options;
  std::vector<HypothesisResult> hypotheses;
  VerificationReport& report;

  void add(std::string name, std::string variant, CheckStatus status,
           Json predicted, Json observed, std::string note = "") {
    report.checks.push_back({std::move(name), std::move(variant), status,
                             std::move(predicted), std::move(observed),
                             std::move(note)});
  }
};

unsigned attested_bound(std::optional<unsigned> found, unsigned limit) {
  return found ? *found : limit + 1;
}

void verify_cbar(Context& ctx) {
  const std::string v = "cbar";
  const Code code(CodeVariant::kCBar, ctx.pi);
  const bool applies = cbar_prediction_applies(ctx.hypotheses, ctx.p, ctx.m);
  const std::string note = applies ? "" : kUnproven;

  const GeneratorMatrix g = generator_matrix(code);
  const std::size_t rank = matrix_rank(g);
  ctx.add("dimension", v, judged(true, rank == code.claimed_dimension()),
          code.claimed_dimension(), rank);

  WeightDist observed = weight_distribution(code);
  if (ctx.options.perturb_weight_count) perturb(observed);
  const Prediction predicted = predict_cbar(ctx.p, ctx.m);
  ctx.report.observed_weights[v] = observed;
  ctx.report.predicted_weights[v] = predicted.weights;
  ctx.add("weight_distribution", v, judged(applies, observed == predicted.weights),
          to_json(predicted.weights), to_json(observed), note);
  ctx.add("minimum_distance", v,
          judged(applies, observed.min_distance() == predicted.weights.min_distance()),
          predicted.weights.min_distance(), observed.min_distance(), note);

  const auto types = classify_all(code);
  const TypeCensus census = census_from_types(types);
  ctx.report.census = census;
  const Prediction table = predict_type_census(ctx.p, ctx.m);
  ctx.add("type_census", v, judged(applies, census == table.census),
          to_json(table.census), to_json(census), note);

  std::uint64_t unclassified = 0;
  for (std::uint64_t n = code.linear({1, 0, 0}); n < types.size(); ++n) {
    const auto kind = types[n].kind;
    if (kind != CodewordType::Kind::kSPlus && kind != CodewordType::Kind::kSMinus) {
      ++unclassified;
    }
  }
  ctx.add("nonzero_a_codewords_signed", v,
          judged(holds(ctx.hypotheses, "perfect_nonlinear"), unclassified == 0), 0,
          unclassified);

  if (!ctx.options.fast) {
    const OrbitReport orbit = verify_transport(code, &types);
    ctx.report.orbit_report = orbit;
    const bool pn = holds(ctx.hypotheses, "perfect_nonlinear");
    const std::uint64_t want_orbits = ctx.q * (ctx.q - 1) / (ctx.p - 1);
    ctx.add("action_free", v, judged(true, orbit.free), true, orbit.free);
    ctx.add("orbit_count", v, judged(true, orbit.orbit_count == want_orbits),
            want_orbits, orbit.orbit_count);
    ctx.add("orbit_size", v,
            judged(true, orbit.orbit_size == std::uint64_t{ctx.p} * (ctx.p - 1)),
            ctx.p * (ctx.p - 1), orbit.orbit_size);
    ctx.add("orbit_census_consistent", v, judged(true, orbit.census_consistent),
            true, orbit.census_consistent);
    ctx.add("transport_law", v, judged(pn, orbit.violation_count == 0), 0,
            orbit.violation_count);
    if (ctx.m % 2 == 0) {
      const std::uint64_t k = ctx.q * (ctx.q - 1) / (2 * (ctx.p - 1));
      ctx.add("orbits_sign_uniform", v, judged(pn, *orbit.orbits_sign_uniform),
              true, *orbit.orbits_sign_uniform);
      ctx.add("orbit_s_counts", v, judged(pn, *orbit.per_orbit_s_counts_ok), true,
              *orbit.per_orbit_s_counts_ok);
      ctx.add("positive_orbits", v, judged(applies, *orbit.positive_orbits == k), k,
              *orbit.positive_orbits, note);
      ctx.add("negative_orbits", v, judged(applies, *orbit.negative_orbits == k), k,
              *orbit.negative_orbits, note);
    } else {
      ctx.add("every_orbit_has_zero_plus", v,
              judged(pn, *orbit.every_orbit_has_zero_plus), true,
              *orbit.every_orbit_has_zero_plus);
    }
  }

  // Dual distance: 5 for p = 3 and m >= 2; the search also attests the
  // moment identities.
  const bool p3 = ctx.p == 3;
  const unsigned limit = p3 ? (!ctx.options.fast && ctx.q <= 243 ? 5 : 3) : 0;
  std::optional<unsigned> dual;
  if (limit > 0) dual = dual_min_distance(g, limit);
  const unsigned attested = limit > 0 ? attested_bound(dual, limit) : 1;
  if (p3 && ctx.m >= 2) {
    Json seen = dual ? Json(*dual) : Json("> " + std::to_string(limit));
    if (limit >= 5) {
      ctx.add("dual_distance", v,
              judged(holds(ctx.hypotheses, "perfect_nonlinear"), dual == 5u), 5, seen);
    } else {
      ctx.add("dual_distance", v, CheckStatus::kNotApplicable, 5, seen,
              "search limited to " + std::to_string(limit));
    }
  }

  const unsigned moments = p3 ? std::min(3u, attested - 1) : 0;
  const bool full_rank = rank == code.claimed_dimension();
  if (full_rank) {
    const auto rs =
        pless_check(observed, code.length(), code.claimed_dimension(), ctx.p,
                    moments, attested);
    const bool zero = std::all_of(rs.begin(), rs.end(), [](Int128 r) { return r == 0; });
    ctx.add("pless_moments", v, judged(true, zero),
            residuals_json(std::vector<Int128>(rs.size(), 0)), residuals_json(rs),
            "moments 0.." + std::to_string(moments));
  } else {
    ctx.add("pless_moments", v, CheckStatus::kNotApplicable, nullptr, nullptr,
            "observed rank below the claimed dimension");
  }
}

void verify_c(Context& ctx) {
  const std::string v = "c";
  const Code code(CodeVariant::kC, ctx.pi);
  const bool applies = c_prediction_applies(ctx.hypotheses, ctx.p, ctx.m);
  const std::string note = applies ? "" : kUnproven;
  const bool zero_at_zero = holds(ctx.hypotheses, "pi_zero_at_zero");

  const GeneratorMatrix g = generator_matrix(code);
  const std::size_t rank = matrix_rank(g);
  ctx.add("dimension", v,
          judged(zero_at_zero, rank == code.claimed_dimension()),
          code.claimed_dimension(), rank,
          zero_at_zero ? "" : "Pi(0) != 0: observed rank reported");

  WeightDist observed = weight_distribution(code);
  if (ctx.options.perturb_weight_count) perturb(observed);
  const Prediction predicted = predict_c(ctx.p, ctx.m);
  ctx.report.observed_weights[v] = observed;
  ctx.report.predicted_weights[v] = predicted.weights;
  ctx.add("weight_distribution", v, judged(applies, observed == predicted.weights),
          to_json(predicted.weights), to_json(observed), note);
  ctx.add("minimum_distance", v,
          judged(applies, observed.min_distance() == predicted.weights.min_distance()),
          predicted.weights.min_distance(), observed.min_distance(), note);

  // Weight of c_{a,b} equals that of c_{a,b,0} less the coordinate at 0.
  const Code full(CodeVariant::kCBar, ctx.pi);
  std::atomic<std::uint64_t> mismatches{0};
  parallel_for(ctx.q, [&](std::size_t a) {
    for (std::uint32_t b = 0; b < ctx.q; ++b) {
      const CodeIndex i{static_cast<std::uint32_t>(a), b, 0};
      const std::uint64_t at_zero = ctx.field.trace(ctx.field.mul(i.a, ctx.pi[0])) != 0;
      if (codeword_weight(code, i) + at_zero != codeword_weight(full, i)) ++mismatches;
    }
  });
  ctx.add("weights_match_cbar_slice", v, judged(true, mismatches == 0), 0,
          mismatches.load());

  if (ctx.m % 2 == 0) {
    std::uint64_t h = 1;
    for (std::uint32_t i = 0; i + 1 < ctx.m / 2; ++i) h *= ctx.p;
    const std::uint64_t base = ctx.q / ctx.p * (ctx.p - 1);
    auto count = [&](std::uint64_t w) {
      const auto it = observed.counts.find(w);
      return it == observed.counts.end() ? std::uint64_t{0} : it->second;
    };
    const std::uint64_t want = ctx.q * (ctx.q - 1) / 2;
    const std::uint64_t lo = count(base - (ctx.p - 1) * h) + count(base + h);
    const std::uint64_t hi = count(base + (ctx.p - 1) * h) + count(base - h);
    ctx.add("slice_pairing", v, judged(applies, lo == want && hi == want),
            Json::array({want, want}), Json::array({lo, hi}), note);
  }

  const unsigned limit = 2;
  const auto dual = dual_min_distance(g, limit);
  const unsigned attested = attested_bound(dual, limit);
  ctx.add("dual_distance_at_least_3", v, judged(applies, !dual.has_value()),
          ">= 3", dual ? Json(*dual) : Json("> 2"), note);

  const unsigned moments = std::min(2u, attested - 1);
  if (rank == code.claimed_dimension()) {
    const auto rs = pless_check(observed, code.length(), code.claimed_dimension(),
                                ctx.p, moments, attested);
    const bool zero = std::all_of(rs.begin(), rs.end(), [](Int128 r) { return r == 0; });
    ctx.add("pless_moments", v, judged(true, zero),
            residuals_json(std::vector<Int128>(rs.size(), 0)), residuals_json(rs),
            "moments 0.." + std::to_string(moments));
  } else {
    ctx.add("pless_moments", v, CheckStatus::kNotApplicable, nullptr, nullptr,
            "observed rank below the claimed dimension");
  }
}

}  // namespace

VerificationReport verify_instance(const FunctionTable& pi,
                                   Json function_descriptor,
                                   const VerifyOptions& options) {
  if (pi.codomain() != Codomain::kField) {
    throw UsageError("verification needs an F_q -> F_q table");
  }
  const Field& field = pi.field();
  VerificationReport report;
  Json variants = Json::array();
  for (auto v : options.variants) variants.push_back(variant_name(v));
  report.instance = Json{{"field", to_json(field.spec())},
                         {"function", std::move(function_descriptor)},
                         {"variants", variants},
                         {"coordinate_order",
                          "canonical field enumeration, index sum c_i p^(m-1-i); "
                          "0 omitted for c"}};

  Context ctx{pi, field, field.p(), field.m(), field.q(), options, {}, report};
  ctx.hypotheses = check_hypotheses(pi);
  const bool pn = holds(ctx.hypotheses, "perfect_nonlinear");

  if (pn) {
    const PNSpectralReport spectral = pn_spectral_report(pi);
    ctx.hypotheses = check_hypotheses(pi, &spectral);
    const std::uint64_t zeros = zero_preimage_count(pi);
    const CycInt expected_sum = CycInt::constant(
        ctx.p, static_cast<std::int64_t>(ctx.q * zeros) - static_cast<std::int64_t>(ctx.q));
    ctx.add("walsh_zero_sum", "", judged(true, spectral.walsh_zero_sum == expected_sum),
            to_json(expected_sum), to_json(spectral.walsh_zero_sum));
    const bool single = zeros == 1;
    ctx.add("sign_sum_vanishes", "", judged(single, spectral.sign_sum.is_zero()),
            to_json(CycInt(ctx.p)), to_json(spectral.sign_sum),
            single ? "" : "needs |Pi^-1(0)| = 1");
    if (ctx.m % 2 == 0) {
      const bool balance_applies = single && !spectral.dual_at_zero_surjective;
      const std::uint64_t half = (ctx.q - 1) / 2;
      ctx.add("sign_balance", "",
              judged(balance_applies,
                     spectral.plus_signs == half && spectral.minus_signs == half),
              Json::array({half, half}),
              Json::array({spectral.plus_signs, spectral.minus_signs}),
              balance_applies ? "" : "needs |Pi^-1(0)| = 1 and a non-surjective dual at 0");
    }
    const std::uint64_t bad = fiber_identity_failures(pi);
    ctx.add("component_fiber_identities", "", judged(true, bad == 0), 0, bad);
  }
  report.hypotheses = ctx.hypotheses;

  if (!pn) {
    // Nothing downstream is meaningful; record the comparisons as skipped.
    for (auto v : options.variants) {
      for (const char* name : {"weight_distribution", "minimum_distance"}) {
        ctx.add(name, variant_name(v), CheckStatus::kNotApplicable, nullptr, nullptr,
                "Pi is not perfect nonlinear");
      }
    }
    return report;
  }
  for (auto v : options.variants) {
    if (v == CodeVariant::kC) {
      verify_c(ctx);
    } else {
      verify_cbar(ctx);
    }
  }
  return report;
}

VerificationReport verify_instance(const PNSpec& spec, const Field& field,
                                   const VerifyOptions& options) {
  return verify_instance(compile(spec, field), to_json(spec), options);
}

}  // namespace pncodes
