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

#include "pncodes/spectra.hpp"

#include <algorithm>

#include "pncodes/errors.hpp"
#include "pncodes/parallel.hpp"

namespace pncodes {

namespace {

void require_prime_valued(const FunctionTable& g) {
  if (g.codomain() != Codomain::kPrime) {
    throw UsageError("Walsh transforms need an F_q -> F_p table");
  }
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Walsh value from the values g(x) and a precomputed row Tr(a x).
CycInt walsh_from_rows(std::span<const std::uint32_t> g,
                       std::span<const std::uint8_t> row, std::uint32_t p) {
  std::vector<std::uint64_t> hist(p, 0);
  for (std::size_t x = 0; x < g.size(); ++x) ++hist[(g[x] + row[x]) % p];
  return CycInt::from_histogram(p, hist);
}

// The 2p possible bent values sign * unit * xi^s, precomputed once.
class WalshDecomposer {
 public:
  WalshDecomposer(std::uint32_t p, std::uint32_t m) : p_(p) {
    for (std::uint32_t s = 0; s < p; ++s) {
      candidates_.push_back(recompose_walsh({1, s}, p, m));
    }
  }

  std::optional<WalshDecomposition> operator()(const CycInt& w) const {
    for (std::uint32_t s = 0; s < p_; ++s) {
      if (candidates_[s] == w) return WalshDecomposition{1, s};
      if (candidates_[s].scale(-1) == w) return WalshDecomposition{-1, s};
    }
    return std::nullopt;
  }

 private:
  std::uint32_t p_;
  std::vector<CycInt> candidates_;
};

WalshDecomposition decompose_or_throw(const WalshDecomposer& decomposer,
                                      const CycInt& w, std::uint64_t q) {
  if (auto d = decomposer(w)) return *d;
  if (w.abs_square().as_integer() != static_cast<std::int64_t>(q)) {
    throw DomainError("function is not bent: |W|^2 = " +
                      w.abs_square().to_string());
  }
  throw InternalConsistencyError("bent Walsh value " + w.to_string() +
                                 " has no sign/dual decomposition");
}

}  // namespace

void trace_row(const Field& field, std::uint32_t b,
               std::span<std::uint8_t> out) {
  const auto traces = field.trace_table();
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    out[x] = traces[field.mul(b, x)];
  }
}

CycInt walsh(const FunctionTable& g, std::uint32_t a) {
  require_prime_valued(g);
  const Field& field = g.field();
  std::vector<std::uint8_t> row(field.q());
  trace_row(field, a, row);
  return walsh_from_rows(g.values(), row, field.p());
}

CycInt walsh_naive(const FunctionTable& g, std::uint32_t a) {
  require_prime_valued(g);
  const Field& field = g.field();
  CycInt sum(field.p());
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    const std::uint32_t e = g[x] + field.trace_by_frobenius(field.mul_schoolbook(a, x));
    sum += CycInt::root_power(field.p(), e);
  }
  return sum;
}

std::vector<CycInt> walsh_spectrum(const FunctionTable& g) {
  require_prime_valued(g);
  const Field& field = g.field();
  std::vector<CycInt> out(field.q());
  parallel_for(field.q(), [&](std::size_t a) {
    out[a] = walsh(g, static_cast<std::uint32_t>(a));
  });
  return out;
}

bool is_bent(const FunctionTable& g) {
  const auto q = static_cast<std::int64_t>(g.field().q());
  for (const auto& w : walsh_spectrum(g)) {
    if (w.abs_square().as_integer() != q) return false;
  }
  return true;
}

SpectralProfile spectral_profile(const FunctionTable& g) {
  const Field& field = g.field();
  SpectralProfile profile;
  profile.p = field.p();
  profile.m = field.m();
  profile.walsh = walsh_spectrum(g);
  const WalshDecomposer decomposer(field.p(), field.m());
  for (const auto& w : profile.walsh) {
    const auto d = decompose_or_throw(decomposer, w, field.q());
    profile.sign.push_back(d.sign);
    profile.dual.push_back(d.dual);
  }
  return profile;
}

std::optional<int> is_weakly_regular(const SpectralProfile& profile) {
  if (profile.sign.empty()) return std::nullopt;
  const int first = profile.sign.front();
  for (int s : profile.sign) {
    if (s != first) return std::nullopt;
  }
  return first;
}

std::optional<int> is_weakly_regular(const FunctionTable& g) {
  return is_weakly_regular(spectral_profile(g));
}

// ---- value distribution shapes ----

std::string DistributionClass::to_string() const {
  switch (shape) {
    case DistributionShape::kEvenPlus:
    case DistributionShape::kOddPlus:
      return std::to_string(s) + "+";
    case DistributionShape::kEvenMinus:
    case DistributionShape::kOddMinus:
      return std::to_string(s) + "-";
    case DistributionShape::kConstant:
      return "constant(" + std::to_string(s) + ")";
    case DistributionShape::kBalanced:
      return "balanced";
    case DistributionShape::kOther:
      return "other";
  }
  return "other";
}

DistributionClassifier::DistributionClassifier(std::uint32_t p, std::uint32_t m)
    : p_(p), m_(m), q_(ipow(p, m)) {
  if (p < 3 || m < 1) throw DomainError("classifier needs odd p and m >= 1");
  for (std::uint32_t i = 0; i < p; ++i) {
    std::vector<std::uint64_t> v(p, 0);
    v[i] = q_;
    shapes_.push_back({{DistributionShape::kConstant, i}, std::move(v)});
  }
  const std::uint64_t base = q_ / p;
  shapes_.push_back(
      {{DistributionShape::kBalanced, 0}, std::vector<std::uint64_t>(p, base)});

  for (int sign : {1, -1}) {
    for (std::uint32_t s = 0; s < p; ++s) {
      std::vector<std::uint64_t> v(p);
      DistributionClass c;
      c.s = s;
      if (m % 2 == 0) {
        const std::int64_t amp = static_cast<std::int64_t>(ipow(p, m / 2 - 1));
        for (std::uint32_t i = 0; i < p; ++i) {
          const std::int64_t delta =
              i == s ? static_cast<std::int64_t>(p - 1) * amp : -amp;
          v[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(base) +
                                            sign * delta);
        }
        c.shape = sign > 0 ? DistributionShape::kEvenPlus
                           : DistributionShape::kEvenMinus;
      } else {
        const std::int64_t amp = static_cast<std::int64_t>(ipow(p, (m - 1) / 2));
        for (std::uint32_t i = 0; i < p; ++i) {
          v[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(base) +
                                            sign * legendre(i + s, p) * amp);
        }
        c.shape = sign > 0 ? DistributionShape::kOddPlus
                           : DistributionShape::kOddMinus;
      }
      shapes_.push_back({c, std::move(v)});
    }
  }
}

DistributionClass DistributionClassifier::classify(
    std::span<const std::uint64_t> counts) const {
  if (counts.size() != p_) throw UsageError("distribution must have p entries");
  for (const auto& [c, v] : shapes_) {
    if (std::equal(counts.begin(), counts.end(), v.begin())) return c;
  }
  return {};
}

std::vector<std::uint64_t> DistributionClassifier::expected(
    const DistributionClass& c) const {
  for (const auto& [shape, v] : shapes_) {
    if (shape == c) return v;
  }
  return {};
}

DistributionClass classify_value_distribution(const ValueDist& d,
                                              std::uint32_t p,
                                              std::uint32_t m) {
  return DistributionClassifier(p, m).classify(d.counts);
}

// ---- PN spectral report ----

PNSpectralReport pn_spectral_report(const FunctionTable& pi) {
  if (pi.codomain() != Codomain::kField) {
    throw UsageError("pn_spectral_report needs an F_q -> F_q table");
  }
  const Field& field = pi.field();
  const std::uint32_t q = field.q();
  const std::uint32_t p = field.p();
  const WalshDecomposer decomposer(p, field.m());

  std::vector<std::vector<std::uint8_t>> rows(q, std::vector<std::uint8_t>(q));
  parallel_for(q, [&](std::size_t b) {
    trace_row(field, static_cast<std::uint32_t>(b), rows[b]);
  });

  struct Component {
    bool weakly_regular = true;
    int sign_at_zero = 1;
    Residue dual_at_zero = 0;
    CycInt walsh_at_zero;
  };
  std::vector<Component> comps(q);
  parallel_for(q - 1, [&](std::size_t i) {
    const auto a = static_cast<std::uint32_t>(i + 1);
    std::vector<std::uint32_t> values(q);
    const auto traces = field.trace_table();
    for (std::uint32_t x = 0; x < q; ++x) values[x] = traces[field.mul(a, pi[x])];
    Component& c = comps[a];
    for (std::uint32_t b = 0; b < q; ++b) {
      const CycInt w = walsh_from_rows(values, rows[b], p);
      const auto d = decompose_or_throw(decomposer, w, q);
      if (b == 0) {
        c.sign_at_zero = d.sign;
        c.dual_at_zero = d.dual;
        c.walsh_at_zero = w;
      } else if (d.sign != c.sign_at_zero) {
        c.weakly_regular = false;
      }
    }
  });

  PNSpectralReport report;
  report.weakly_regular_pn = true;
  report.signs.assign(q, 0);
  report.dual_at_zero.assign(q, 0);
  report.sign_sum = CycInt(p);
  report.walsh_zero_sum = CycInt(p);
  std::vector<bool> hit(p, false);
  for (std::uint32_t a = 1; a < q; ++a) {
    const Component& c = comps[a];
    report.weakly_regular_pn = report.weakly_regular_pn && c.weakly_regular;
    report.signs[a] = c.sign_at_zero;
    report.dual_at_zero[a] = c.dual_at_zero;
    hit[c.dual_at_zero] = true;
    (c.sign_at_zero > 0 ? report.plus_signs : report.minus_signs) += 1;
    report.sign_sum +=
        CycInt::root_power(p, c.dual_at_zero).scale(c.sign_at_zero);
    report.walsh_zero_sum += c.walsh_at_zero;
  }
  report.dual_at_zero_surjective =
      std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return report;
}

}  // namespace pncodes
