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

// Reference implementations used only by the tests. Each one takes a route
// that shares no code path with the library routine it checks.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "pncodes/codes.hpp"
#include "pncodes/cyclotomic.hpp"
#include "pncodes/field.hpp"
#include "pncodes/functions.hpp"
#include "pncodes/spectra.hpp"

namespace pncodes::ref {

using Poly = std::vector<std::int64_t>;  // low to high

// ---- seeded generators ----

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
  }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  CycInt cyc(std::uint32_t p, std::int64_t bound) {
    std::vector<std::int64_t> c(p - 1);
    for (auto& v : c) v = between(-bound, bound);
    return CycInt(p, std::move(c));
  }

  // A random F_q -> F_p table.
  FunctionTable prime_table(const Field& field) {
    std::vector<std::uint32_t> v(field.q());
    for (auto& x : v) x = static_cast<std::uint32_t>(below(field.p()));
    return FunctionTable(field, Codomain::kPrime, std::move(v));
  }

 private:
  std::mt19937_64 rng_;
};

// ---- polynomials over F_p ----

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::int64_t mod(std::int64_t v, std::int64_t p) {
  const std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x) {
    if (mod(a * x, p) == 1) return x;
  }
  return 0;
}

// Remainder of f by g over F_p by long division.
inline Poly poly_rem(Poly f, Poly g, std::int64_t p) {
  for (auto& c : f) c = mod(c, p);
  for (auto& c : g) c = mod(c, p);
  trim(f);
  trim(g);
  const std::int64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::int64_t factor = mod(f.back() * lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = mod(f[shift + i] - factor * g[i], p);
    }
    trim(f);
  }
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool irreducible_by_trial_division(const std::vector<std::uint32_t>& poly,
                                          std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      std::uint64_t v = n;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::int64_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Product of two field elements: coefficient vectors multiplied as integer
// polynomials, then reduced by long division.
inline std::uint32_t field_mul(const Field& field, std::uint32_t x, std::uint32_t y) {
  const auto dx = field.digits(x);
  const auto dy = field.digits(y);
  Poly prod(dx.size() + dy.size(), 0);
  for (std::size_t i = 0; i < dx.size(); ++i) {
    for (std::size_t j = 0; j < dy.size(); ++j) prod[i + j] += dx[i] * dy[j];
  }
  const auto& mod_u = field.spec().modulus;
  Poly r = poly_rem(prod, Poly(mod_u.begin(), mod_u.end()), field.p());
  std::vector<std::uint32_t> digits(field.m(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) digits[i] = static_cast<std::uint32_t>(r[i]);
  return field.from_digits(digits);
}

inline std::uint32_t field_pow(const Field& field, std::uint32_t x, std::uint64_t e) {
  std::uint32_t r = field.one().index();
  for (std::uint64_t i = 0; i < e; ++i) r = field_mul(field, r, x);
  return r;
}

// Trace as the sum of x^{p^i}, using only field_mul.
inline Residue field_trace(const Field& field, std::uint32_t x) {
  std::uint32_t sum = 0;
  std::uint32_t conj = x;
  for (std::uint32_t i = 0; i < field.m(); ++i) {
    sum = field.add(sum, conj);
    conj = field_pow(field, conj, field.p());
  }
  return field.digits(sum)[0];
}

// ---- cyclotomic integers ----

// Product in Z[X] reduced by long division by 1 + X + ... + X^{p-1}
// (monic, so integer division is exact).
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) {
  const std::uint32_t p = a.p();
  Poly prod(2 * (p - 1), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      prod[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  for (std::size_t top = prod.size(); top-- > p - 1;) {
    const std::int64_t c = prod[top];
    if (c == 0) continue;
    for (std::size_t i = 0; i < p; ++i) prod[top - (p - 1) + i] -= c;
  }
  prod.resize(p - 1);
  return CycInt(p, prod);
}

// Complex embedding xi -> exp(2 pi i / p).
inline std::complex<long double> embed(const CycInt& z) {
  const long double pi = std::acos(-1.0L);
  std::complex<long double> sum = 0;
  for (std::size_t k = 0; k < z.coeffs().size(); ++k) {
    sum += static_cast<long double>(z.coeffs()[k]) *
           std::polar(1.0L, 2 * pi * static_cast<long double>(k) / z.p());
  }
  return sum;
}

// Walsh value summed one root of unity at a time, with field_mul/field_trace.
inline CycInt walsh_ref(const FunctionTable& g, std::uint32_t a) {
  const Field& field = g.field();
  std::vector<std::int64_t> full(field.p(), 0);
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    ++full[(g[x] + field_trace(field, field_mul(field, a, x))) % field.p()];
  }
  std::vector<std::int64_t> c(field.p() - 1);
  for (std::size_t i = 0; i + 1 < field.p(); ++i) c[i] = full[i] - full[field.p() - 1];
  return CycInt(field.p(), c);
}

// ---- codes ----

// Rows of a generator matrix built directly from field operations.
inline std::vector<std::vector<Residue>> generator_rows(const FunctionTable& pi,
                                                        bool full) {
  const Field& field = pi.field();
  std::vector<std::vector<Residue>> rows;
  const std::uint32_t start = full ? 0 : 1;
  auto row = [&](std::uint32_t a, std::uint32_t b, Residue c) {
    std::vector<Residue> r;
    for (std::uint32_t x = start; x < field.q(); ++x) {
      const std::uint32_t v = field.add(field_mul(field, a, pi[x]), field_mul(field, b, x));
      r.push_back((field_trace(field, v) + c) % field.p());
    }
    return r;
  };
  for (std::uint32_t i = 0; i < field.m(); ++i) rows.push_back(row(field.basis(i).index(), 0, 0));
  for (std::uint32_t i = 0; i < field.m(); ++i) rows.push_back(row(0, field.basis(i).index(), 0));
  if (full) rows.push_back(row(0, 0, 1));
  return rows;
}

// Weight distribution of the row space by enumerating all p^k combinations.
inline WeightDist span_weights(const std::vector<std::vector<Residue>>& rows,
                               std::uint32_t p) {
  WeightDist d;
  const std::size_t k = rows.size();
  const std::size_t n = rows[0].size();
  std::vector<std::uint32_t> coef(k, 0);
  std::vector<std::uint32_t> word(n);
  while (true) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) word[j] = (word[j] + coef[i] * rows[i][j]) % p;
    }
    ++d.counts[static_cast<std::uint64_t>(
        std::count_if(word.begin(), word.end(), [](std::uint32_t v) { return v != 0; }))];
    std::size_t i = 0;
    while (i < k && ++coef[i] == p) coef[i++] = 0;
    if (i == k) break;
  }
  return d;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && mod(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = inv_mod(mod(m[rank][c], p), p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const std::int64_t f = mod(m[r][c] * inv, p);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

// Smallest number of linearly dependent columns, by rank of every subset
// of size up to `limit`; 0 if none.
inline unsigned dual_distance_by_subsets(const std::vector<std::vector<Residue>>& rows,
                                         std::uint32_t p, unsigned limit) {
  const std::size_t n = rows[0].size();
  for (unsigned w = 1; w <= limit && w <= n; ++w) {
    std::vector<std::size_t> pick(w);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<std::vector<std::int64_t>> sub;
      for (auto c : pick) {
        std::vector<std::int64_t> col;
        for (const auto& r : rows) col.push_back(r[c]);
        sub.push_back(col);
      }
      if (rank_mod_p(sub, p) < w) return w;
      int i = static_cast<int>(w) - 1;
      while (i >= 0 && pick[i] == n - w + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::size_t j = i + 1; j < w; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return 0;
}

// ---- moments ----

inline __int128 binom(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  __int128 out = 1;
  for (std::int64_t i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
  return out;
}

// Binomial-moment identity of a linear [n, k] code over F_p whose dual
// distance exceeds r:  sum_j C(n - j, r) A_j = p^{k - r} C(n, r).
inline __int128 binomial_moment_residual(const WeightDist& d, std::int64_t n,
                                         std::int64_t k, std::int64_t p,
                                         std::int64_t r) {
  __int128 lhs = 0;
  for (const auto& [w, c] : d.counts) {
    lhs += binom(n - static_cast<std::int64_t>(w), r) * static_cast<__int128>(c);
  }
  __int128 pk = 1;
  for (std::int64_t i = 0; i < k - r; ++i) pk *= p;
  return lhs - pk * binom(n, r);
}

// ---- property routines shared by the unit suite and the acceptance run ----

// Ring axioms, conjugation as an automorphism, and the independent
// multiplication oracle; returns the number of failing cases.
inline std::uint64_t cyclotomic_fuzz_failures(std::uint32_t p, std::uint64_t cases,
                                              std::uint64_t seed) {
  Gen gen(seed);
  std::uint64_t bad = 0;
  const CycInt one = CycInt::constant(p, 1);
  for (std::uint64_t i = 0; i < cases; ++i) {
    const CycInt x = gen.cyc(p, 50);
    const CycInt y = gen.cyc(p, 50);
    const CycInt z = gen.cyc(p, 50);
    bool ok = x + y == y + x && x * y == y * x && (x + y) + z == x + (y + z) &&
              (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
              x * one == x && x + (-x) == CycInt(p) && x * y == cyc_mul(x, y) &&
              (x * y).conj() == x.conj() * y.conj() &&
              (x + y).conj() == x.conj() + y.conj() && x.conj().conj() == x &&
              x.abs_square().conj() == x.abs_square();
    const auto ex = embed(x * y);
    const auto ee = embed(x) * embed(y);
    ok = ok && std::abs(ex - ee) < 1e-6L * (1 + std::abs(ee));
    bad += !ok;
  }
  return bad;
}

// Fields with q <= 3^5 used by the Parseval and trace suites.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields() {
  return {{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}};
}

// sum_a |W_g(a)|^2 = q^2 for random tables; counts failing tables. Tables
// that happen to be bent are skipped and replaced.
inline std::uint64_t parseval_failures(const Field& field, unsigned tables,
                                       std::uint64_t seed) {
  Gen gen(seed);
  std::uint64_t bad = 0;
  const auto q = static_cast<std::int64_t>(field.q());
  for (unsigned done = 0; done < tables;) {
    const FunctionTable g = gen.prime_table(field);
    const auto spectrum = walsh_spectrum(g);
    CycInt sum(field.p());
    bool bent = true;
    for (const auto& w : spectrum) {
      const CycInt s = w.abs_square();
      bent = bent && s.as_integer() == q;
      sum += s;
    }
    if (bent) continue;
    bad += !(sum == CycInt::constant(field.p(), q * q));
    ++done;
  }
  return bad;
}

// Every b != 0 gives a balanced x -> Tr(b x); the trace is additive.
inline bool trace_balanced(const Field& field) {
  const auto traces = field.trace_table();
  for (std::uint32_t b = 1; b < field.q(); ++b) {
    std::vector<std::uint64_t> n(field.p(), 0);
    for (std::uint32_t x = 0; x < field.q(); ++x) ++n[traces[field.mul(b, x)]];
    for (auto c : n) {
      if (c * field.p() != field.q()) return false;
    }
  }
  return true;
}

// Fiber identities on every component Tr(a Pi(x) + b x), a != 0, with the
// fibers counted directly.
inline std::uint64_t component_identity_failures(const FunctionTable& pi) {
  const Field& field = pi.field();
  std::uint64_t bad = 0;
  for (std::uint32_t a = 1; a < field.q(); ++a) {
    for (std::uint32_t b = 0; b < field.q(); ++b) {
      ValueDist d{std::vector<std::uint64_t>(field.p(), 0)};
      for (std::uint32_t x = 0; x < field.q(); ++x) {
        ++d.counts[field.trace(field.add(field.mul(a, pi[x]), field.mul(b, x)))];
      }
      bad += !lemma1_check(d, field.q());
    }
  }
  return bad;
}

}  // namespace pncodes::ref
