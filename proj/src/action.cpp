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

#include "pncodes/action.hpp"

#include <algorithm>

#include "pncodes/cyclotomic.hpp"
#include "pncodes/errors.hpp"
#include "pncodes/parallel.hpp"

namespace pncodes {

namespace {

constexpr std::size_t kKeptViolations = 16;

Residue inverse_mod(Residue a, std::uint32_t p) {
  for (Residue x = 1; x < p; ++x) {
    if (static_cast<std::uint64_t>(a) * x % p == 1) return x;
  }
  throw DomainError("zero has no inverse mod p");
}

void require_cbar(const Code& code) {
  if (code.variant() != CodeVariant::kCBar) {
    throw UsageError("the group acts on the length-q code");
  }
}

CodewordType transported(const CodewordType& type, const GroupElement& g,
                         std::uint32_t p, std::uint32_t m) {
  using Kind = CodewordType::Kind;
  if (type.kind != Kind::kSPlus && type.kind != Kind::kSMinus) return {};
  CodewordType out;
  if (m % 2 == 1) {
    out.s = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(g.alpha) * type.s + p - g.beta) % p);
    const bool flip = legendre(inverse_mod(g.alpha, p), p) < 0;
    out.kind = flip ? (type.kind == Kind::kSPlus ? Kind::kSMinus : Kind::kSPlus)
                    : type.kind;
  } else {
    out.s = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(g.alpha) * type.s + g.beta) % p);
    out.kind = type.kind;
  }
  return out;
}

}  // namespace

GroupElement compose(const GroupElement& g, const GroupElement& h,
                     std::uint32_t p) {
  return {static_cast<Residue>(static_cast<std::uint64_t>(g.alpha) * h.alpha % p),
          static_cast<Residue>(
              (static_cast<std::uint64_t>(g.alpha) * h.beta + g.beta) % p)};
}

GroupElement inverse(const GroupElement& g, std::uint32_t p) {
  const Residue ai = inverse_mod(g.alpha, p);
  return {ai, static_cast<Residue>(static_cast<std::uint64_t>(ai) * (p - g.beta) % p)};
}

std::vector<GroupElement> group_elements(std::uint32_t p) {
  std::vector<GroupElement> out;
  for (Residue a = 1; a < p; ++a) {
    for (Residue b = 0; b < p; ++b) out.push_back({a, b});
  }
  return out;
}

CodeIndex act(const Field& field, const GroupElement& g, const CodeIndex& x) {
  const std::uint32_t p = field.p();
  if (g.alpha == 0 || g.alpha >= p || g.beta >= p) {
    throw UsageError("group element out of range");
  }
  const std::uint32_t alpha = field.from_residue(g.alpha);
  return {field.mul(alpha, x.a), field.mul(alpha, x.b),
          static_cast<Residue>((static_cast<std::uint64_t>(g.alpha) * x.t + g.beta) % p)};
}

std::vector<Orbit> orbits(const Code& code) {
  require_cbar(code);
  const Field& field = code.field();
  const auto group = group_elements(field.p());
  std::vector<bool> visited(code.index_count(), false);
  std::vector<Orbit> out;
  const std::uint64_t first = code.linear({1, 0, 0});
  for (std::uint64_t n = first; n < code.index_count(); ++n) {
    if (visited[n]) continue;
    const CodeIndex seed = code.from_linear(n);
    Orbit orbit;
    for (const auto& g : group) {
      const std::uint64_t image = code.linear(act(field, g, seed));
      if (!visited[image]) {
        visited[image] = true;
        orbit.members.push_back(image);
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::uint64_t stabilizer_size(const Code& code, const CodeIndex& x) {
  require_cbar(code);
  std::uint64_t n = 0;
  for (const auto& g : group_elements(code.field().p())) {
    n += act(code.field(), g, x) == x;
  }
  return n;
}

bool verify_free(const Code& code, Stratum stratum) {
  require_cbar(code);
  const Field& field = code.field();
  const std::uint32_t q = field.q();
  const auto group = group_elements(field.p());
  std::vector<char> ok(q, 1);
  const std::uint32_t a_begin = stratum == Stratum::kNonzeroA ? 1 : 0;
  const std::uint32_t a_end = stratum == Stratum::kNonzeroA ? q : 1;
  parallel_for(a_end - a_begin, [&](std::size_t i) {
    const auto a = static_cast<std::uint32_t>(a_begin + i);
    for (std::uint32_t b = 0; b < q; ++b) {
      for (Residue t = 0; t < field.p(); ++t) {
        const CodeIndex x{a, b, t};
        for (const auto& g : group) {
          if (g == GroupElement{}) continue;
          if (act(field, g, x) == x) {
            ok[a] = 0;
            return;
          }
        }
      }
    }
  });
  return std::all_of(ok.begin() + a_begin, ok.begin() + a_end,
                     [](char c) { return c != 0; });
}

OrbitReport verify_transport(const Code& code,
                             const std::vector<CodewordType>* types) {
  require_cbar(code);
  const Field& field = code.field();
  const std::uint32_t p = field.p();
  const std::uint32_t m = field.m();
  const std::uint32_t q = field.q();
  std::vector<CodewordType> computed;
  if (types == nullptr) {
    computed = classify_all(code);
    types = &computed;
  }
  if (types->size() != code.index_count()) {
    throw UsageError("type table does not match the code");
  }
  const auto group = group_elements(p);

  OrbitReport report;
  report.free = verify_free(code);
  report.stratum_size = static_cast<std::uint64_t>(q - 1) * q * p;

  // Transport law, one a-slice per task.
  std::vector<std::vector<TransportViolation>> found(q);
  std::vector<std::uint64_t> counts(q, 0);
  parallel_for(q - 1, [&](std::size_t i) {
    const auto a = static_cast<std::uint32_t>(i + 1);
    for (std::uint32_t b = 0; b < q; ++b) {
      for (Residue t = 0; t < p; ++t) {
        const CodeIndex x{a, b, t};
        const CodewordType& type = (*types)[code.linear(x)];
        for (const auto& g : group) {
          const CodewordType want = transported(type, g, p, m);
          const CodewordType got = (*types)[code.linear(act(field, g, x))];
          if (want.kind == CodewordType::Kind::kOther || !(want == got)) {
            ++counts[a];
            if (found[a].size() < kKeptViolations) found[a].push_back({x, g, want, got});
          }
        }
      }
    }
  });
  for (std::uint32_t a = 1; a < q; ++a) {
    report.violation_count += counts[a];
    for (const auto& v : found[a]) {
      if (report.violations.size() < kKeptViolations) report.violations.push_back(v);
    }
  }

  const auto orbit_list = orbits(code);
  report.orbit_count = orbit_list.size();
  std::uint64_t common = orbit_list.empty() ? 0 : orbit_list.front().members.size();
  for (const auto& o : orbit_list) {
    if (o.members.size() != common) common = 0;
  }
  report.orbit_size = common;

  TypeCensus from_orbits;
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  bool uniform = true;
  bool s_counts_ok = true;
  bool zero_plus_everywhere = true;
  for (const auto& o : orbit_list) {
    TypeCensus local;
    for (auto n : o.members) ++local[(*types)[n]];
    for (const auto& [t, c] : local) from_orbits[t] += c;

    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
    for (const auto& [t, c] : local) {
      if (t.kind == CodewordType::Kind::kSPlus) plus += c;
      if (t.kind == CodewordType::Kind::kSMinus) minus += c;
    }
    if (plus == o.members.size()) {
      ++positive;
    } else if (minus == o.members.size()) {
      ++negative;
    } else {
      uniform = false;
    }
    if (m % 2 == 0) {
      const auto kind = plus >= minus ? CodewordType::Kind::kSPlus
                                      : CodewordType::Kind::kSMinus;
      for (std::uint32_t s = 0; s < p; ++s) {
        const auto it = local.find({kind, s});
        if (it == local.end() || it->second != p - 1) s_counts_ok = false;
      }
    } else if (!local.contains({CodewordType::Kind::kSPlus, 0})) {
      zero_plus_everywhere = false;
    }
  }

  TypeCensus global;
  for (std::uint64_t n = code.linear({1, 0, 0}); n < code.index_count(); ++n) {
    ++global[(*types)[n]];
  }
  report.census_consistent = global == from_orbits;

  if (m % 2 == 0) {
    report.positive_orbits = positive;
    report.negative_orbits = negative;
    report.orbits_sign_uniform = uniform;
    report.per_orbit_s_counts_ok = s_counts_ok;
  } else {
    report.every_orbit_has_zero_plus = zero_plus_everywhere;
  }
  return report;
}

}  // namespace pncodes
