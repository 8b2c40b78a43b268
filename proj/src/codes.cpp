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

#include "pncodes/codes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pncodes/errors.hpp"
#include "pncodes/parallel.hpp"

namespace pncodes {

namespace {

// Rows Tr(b x) are tabulated up front while the table stays small.
constexpr std::uint32_t kRowTableLimit = 4096;

class TraceRows {
 public:
  explicit TraceRows(const Field& field) : field_(field) {
    const std::uint32_t q = field.q();
    if (q <= kRowTableLimit) {
      table_.resize(static_cast<std::size_t>(q) * q);
      parallel_for(q, [&](std::size_t b) {
        trace_row(field, static_cast<std::uint32_t>(b),
                  std::span(table_).subspan(b * q, q));
      });
    }
  }

  // Row b, either from the table or computed into scratch.
  std::span<const std::uint8_t> row(std::uint32_t b,
                                    std::vector<std::uint8_t>& scratch) const {
    const std::uint32_t q = field_.q();
    if (!table_.empty()) {
      return std::span<const std::uint8_t>(table_).subspan(
          static_cast<std::size_t>(b) * q, q);
    }
    scratch.resize(q);
    trace_row(field_, b, scratch);
    return scratch;
  }

 private:
  const Field& field_;
  std::vector<std::uint8_t> table_;
};

// u[x] = Tr(a Pi(x)).
std::vector<std::uint8_t> outer_row(const Code& code, std::uint32_t a) {
  const Field& field = code.field();
  const auto traces = field.trace_table();
  std::vector<std::uint8_t> u(field.q());
  for (std::uint32_t x = 0; x < field.q(); ++x) {
    u[x] = traces[field.mul(a, code.pi()[x])];
  }
  return u;
}

// h[r] = #{x : Tr(a Pi(x)) + Tr(b x) = r}.
void fiber_histogram(std::span<const std::uint8_t> u,
                     std::span<const std::uint8_t> row, std::uint32_t p,
                     std::vector<std::uint64_t>& h) {
  h.assign(p, 0);
  for (std::size_t x = 0; x < u.size(); ++x) ++h[(u[x] + row[x]) % p];
}

std::uint64_t weight_from_histogram(const Code& code,
                                    std::span<const std::uint64_t> h,
                                    std::uint8_t value_at_zero, Residue t) {
  const std::uint32_t p = code.field().p();
  const std::uint64_t q = code.field().q();
  if (code.variant() == CodeVariant::kCBar) {
    return q - h[(p - t % p) % p];
  }
  const std::uint64_t zeros_off_origin = h[0] - (value_at_zero == 0 ? 1 : 0);
  return (q - 1) - zeros_off_origin;
}

void check_index(const Code& code, const CodeIndex& i) {
  const std::uint32_t q = code.field().q();
  if (i.a >= q || i.b >= q) throw UsageError("codeword index out of range");
  if (code.variant() == CodeVariant::kC ? i.t != 0 : i.t >= code.field().p()) {
    throw UsageError("codeword constant index out of range");
  }
}

// Counts of each value of f_{a,b,t}, shifted from the (a, b) histogram.
std::vector<std::uint64_t> shifted(std::span<const std::uint64_t> h, Residue t) {
  const std::size_t p = h.size();
  std::vector<std::uint64_t> n(p);
  for (std::size_t i = 0; i < p; ++i) n[i] = h[(i + p - t) % p];
  return n;
}

}  // namespace

std::string variant_name(CodeVariant v) {
  return v == CodeVariant::kC ? "c" : "cbar";
}

// ---- Code ----

Code::Code(CodeVariant variant, FunctionTable pi)
    : variant_(variant), pi_(std::move(pi)) {
  if (pi_.codomain() != Codomain::kField) {
    throw UsageError("codes are built from an F_q -> F_q table");
  }
  const Field& f = pi_.field();
  lifts_.assign(f.p(), 0);
  std::vector<bool> seen(f.p(), false);
  std::uint32_t found = 0;
  for (std::uint32_t x = 0; x < f.q() && found < f.p(); ++x) {
    const Residue t = f.trace(x);
    if (!seen[t]) {
      seen[t] = true;
      lifts_[t] = x;
      ++found;
    }
  }
}

std::uint32_t Code::length() const {
  return variant_ == CodeVariant::kC ? field().q() - 1 : field().q();
}

std::uint32_t Code::claimed_dimension() const {
  return 2 * field().m() + (variant_ == CodeVariant::kCBar ? 1 : 0);
}

std::uint64_t Code::index_count() const {
  const std::uint64_t q = field().q();
  return variant_ == CodeVariant::kC ? q * q : q * q * field().p();
}

std::uint64_t Code::linear(const CodeIndex& i) const {
  const std::uint64_t q = field().q();
  const std::uint64_t ab = static_cast<std::uint64_t>(i.a) * q + i.b;
  return variant_ == CodeVariant::kC ? ab : ab * field().p() + i.t;
}

CodeIndex Code::from_linear(std::uint64_t n) const {
  const std::uint64_t q = field().q();
  CodeIndex i;
  if (variant_ == CodeVariant::kCBar) {
    i.t = static_cast<Residue>(n % field().p());
    n /= field().p();
  }
  i.a = static_cast<std::uint32_t>(n / q);
  i.b = static_cast<std::uint32_t>(n % q);
  return i;
}

// ---- weights ----

std::uint64_t codeword_weight(const Code& code, const CodeIndex& index) {
  check_index(code, index);
  const Field& field = code.field();
  const auto u = outer_row(code, index.a);
  std::vector<std::uint8_t> row(field.q());
  trace_row(field, index.b, row);
  std::vector<std::uint64_t> h;
  fiber_histogram(u, row, field.p(), h);
  const auto at_zero = static_cast<std::uint8_t>((u[0] + row[0]) % field.p());
  return weight_from_histogram(code, h, at_zero, index.t);
}

std::vector<Residue> materialize(const Code& code, const CodeIndex& index) {
  check_index(code, index);
  const Field& field = code.field();
  const std::uint32_t c = code.trace_lift(index.t);
  std::vector<Residue> word;
  word.reserve(code.length());
  const std::uint32_t start = code.variant() == CodeVariant::kC ? 1 : 0;
  for (std::uint32_t x = start; x < field.q(); ++x) {
    const std::uint32_t arg = field.add(
        field.add(field.mul_schoolbook(index.a, code.pi()[x]),
                  field.mul_schoolbook(index.b, x)),
        c);
    word.push_back(field.trace_by_frobenius(arg));
  }
  return word;
}

std::uint64_t WeightDist::total() const {
  std::uint64_t n = 0;
  for (const auto& [w, c] : counts) n += c;
  return n;
}

std::uint64_t WeightDist::min_distance() const {
  for (const auto& [w, c] : counts) {
    if (w != 0 && c != 0) return w;
  }
  return 0;
}

std::string WeightDist::to_csv() const {
  std::ostringstream out;
  out << "weight,count\n";
  for (const auto& [w, c] : counts) out << w << ',' << c << '\n';
  return out.str();
}

WeightDist weight_distribution(const Code& code, EnumerationMethod method) {
  const Field& field = code.field();
  const std::uint32_t q = field.q();
  const std::uint32_t p = field.p();
  const std::uint32_t ts = code.variant() == CodeVariant::kCBar ? p : 1;
  // One weight histogram per a; merged in index order at the end.
  std::vector<std::vector<std::uint64_t>> per_a(
      q, std::vector<std::uint64_t>(code.length() + 1, 0));

  if (method == EnumerationMethod::kMaterialize) {
    parallel_for(q, [&](std::size_t a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        for (Residue t = 0; t < ts; ++t) {
          const auto word =
              materialize(code, {static_cast<std::uint32_t>(a), b, t});
          const auto w = static_cast<std::size_t>(
              std::count_if(word.begin(), word.end(), [](Residue r) { return r != 0; }));
          ++per_a[a][w];
        }
      }
    });
  } else {
    const TraceRows rows(field);
    parallel_for(q, [&](std::size_t ai) {
      const auto a = static_cast<std::uint32_t>(ai);
      const auto u = outer_row(code, a);
      std::vector<std::uint8_t> scratch;
      std::vector<std::uint64_t> h;
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto row = rows.row(b, scratch);
        fiber_histogram(u, row, p, h);
        const auto at_zero = static_cast<std::uint8_t>((u[0] + row[0]) % p);
        for (Residue t = 0; t < ts; ++t) {
          ++per_a[a][weight_from_histogram(code, h, at_zero, t)];
        }
      }
    });
  }

  WeightDist dist;
  for (std::size_t w = 0; w <= code.length(); ++w) {
    std::uint64_t n = 0;
    for (const auto& slice : per_a) n += slice[w];
    if (n != 0) dist.counts[w] = n;
  }
  return dist;
}

// ---- codeword types ----

CodewordType CodewordType::from_class(const DistributionClass& c) {
  switch (c.shape) {
    case DistributionShape::kConstant:
      return {Kind::kConstant, c.s};
    case DistributionShape::kBalanced:
      return {Kind::kBalanced, 0};
    case DistributionShape::kEvenPlus:
    case DistributionShape::kOddPlus:
      return {Kind::kSPlus, c.s};
    case DistributionShape::kEvenMinus:
    case DistributionShape::kOddMinus:
      return {Kind::kSMinus, c.s};
    case DistributionShape::kOther:
      break;
  }
  return {};
}

std::string CodewordType::to_string() const {
  switch (kind) {
    case Kind::kConstant:
      return "constant(" + std::to_string(s) + ")";
    case Kind::kBalanced:
      return "balanced";
    case Kind::kSPlus:
      return std::to_string(s) + "+";
    case Kind::kSMinus:
      return std::to_string(s) + "-";
    case Kind::kOther:
      break;
  }
  return "other";
}

namespace {

void require_cbar(const Code& code) {
  if (code.variant() != CodeVariant::kCBar) {
    throw UsageError("codeword types are defined on the length-q code");
  }
}

}  // namespace

CodewordType classify_codeword(const Code& code, const CodeIndex& index) {
  require_cbar(code);
  check_index(code, index);
  const Field& field = code.field();
  const auto u = outer_row(code, index.a);
  std::vector<std::uint8_t> row(field.q());
  trace_row(field, index.b, row);
  std::vector<std::uint64_t> h;
  fiber_histogram(u, row, field.p(), h);
  const DistributionClassifier classifier(field.p(), field.m());
  return CodewordType::from_class(classifier.classify(shifted(h, index.t)));
}

std::vector<CodewordType> classify_all(const Code& code) {
  require_cbar(code);
  const Field& field = code.field();
  const std::uint32_t q = field.q();
  const std::uint32_t p = field.p();
  const DistributionClassifier classifier(p, field.m());
  const TraceRows rows(field);
  std::vector<CodewordType> types(code.index_count());
  parallel_for(q, [&](std::size_t ai) {
    const auto a = static_cast<std::uint32_t>(ai);
    const auto u = outer_row(code, a);
    std::vector<std::uint8_t> scratch;
    std::vector<std::uint64_t> h;
    for (std::uint32_t b = 0; b < q; ++b) {
      fiber_histogram(u, rows.row(b, scratch), p, h);
      for (Residue t = 0; t < p; ++t) {
        types[code.linear({a, b, t})] =
            CodewordType::from_class(classifier.classify(shifted(h, t)));
      }
    }
  });
  return types;
}

TypeCensus census_from_types(const std::vector<CodewordType>& types) {
  TypeCensus census;
  for (const auto& t : types) ++census[t];
  return census;
}

TypeCensus type_census(const Code& code) {
  return census_from_types(classify_all(code));
}

// ---- generator matrix ----

std::string GeneratorMatrix::to_text() const {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (auto d : row) out << d;
    out << '\n';
  }
  return out.str();
}

GeneratorMatrix generator_matrix(const Code& code) {
  const Field& field = code.field();
  GeneratorMatrix g;
  g.p = field.p();
  for (std::uint32_t i = 0; i < field.m(); ++i) {
    g.rows.push_back(materialize(code, {field.basis(i).index(), 0, 0}));
  }
  for (std::uint32_t i = 0; i < field.m(); ++i) {
    g.rows.push_back(materialize(code, {0, field.basis(i).index(), 0}));
  }
  if (code.variant() == CodeVariant::kCBar) {
    g.rows.push_back(materialize(code, {0, 0, 1}));
  }
  return g;
}

std::size_t matrix_rank(const GeneratorMatrix& g) {
  const std::uint32_t p = g.p;
  auto rows = g.rows;
  const std::size_t cols = g.column_count();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    // Inverse of the pivot by Fermat.
    std::uint64_t inv = 1;
    for (std::uint32_t e = 0; e < p - 2; ++e) inv = inv * rows[rank][c] % p;
    for (auto& v : rows[rank]) v = static_cast<Residue>(v * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = static_cast<Residue>(
            (rows[r][k] + (p - f) * rows[rank][k]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

// ---- dual distance ----

namespace {

constexpr unsigned kMaxDualSearch = 6;
constexpr std::size_t kMaxRows = 40;

using Column = std::array<std::uint8_t, kMaxRows>;

struct ColumnSearch {
  std::uint32_t p;
  std::size_t k;
  std::vector<Column> cols;

  std::uint64_t key(const Column& v) const {
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < k; ++i) h = h * p + v[i];
    return h;
  }

  void add_scaled(Column& acc, std::size_t c, std::uint32_t coef) const {
    for (std::size_t i = 0; i < k; ++i) {
      acc[i] = static_cast<std::uint8_t>((acc[i] + coef * cols[c][i]) % p);
    }
  }

  Column negated(const Column& v) const {
    Column out{};
    for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint8_t>((p - v[i]) % p);
    return out;
  }

  // Calls fn(sum, chosen) for every choice of `size` distinct columns in
  // increasing order with nonzero coefficients; the first coefficient is 1
  // when `monic`.
  template <typename Fn>
  void combinations(unsigned size, bool monic, Fn&& fn) const {
    std::vector<std::uint32_t> chosen;
    Column acc{};
    walk(size, monic, 0, chosen, acc, fn);
  }

  template <typename Fn>
  void walk(unsigned size, bool monic, std::size_t from,
            std::vector<std::uint32_t>& chosen, const Column& acc, Fn& fn) const {
    if (chosen.size() == size) {
      fn(acc, chosen);
      return;
    }
    const std::uint32_t top = (monic && chosen.empty()) ? 1 : p - 1;
    for (std::size_t c = from; c < cols.size(); ++c) {
      chosen.push_back(static_cast<std::uint32_t>(c));
      for (std::uint32_t coef = 1; coef <= top; ++coef) {
        Column next = acc;
        add_scaled(next, c, coef);
        walk(size, monic, c + 1, chosen, next, fn);
      }
      chosen.pop_back();
    }
  }
};

bool is_zero_column(const Column& v, std::size_t k) {
  return std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k),
                     [](std::uint8_t d) { return d == 0; });
}

bool disjoint(const std::vector<std::uint32_t>& x,
              std::span<const std::uint32_t> y) {
  for (auto i : x) {
    if (std::find(y.begin(), y.end(), i) != y.end()) return false;
  }
  return true;
}

bool dependent_set_of_size(const ColumnSearch& s, unsigned w) {
  const unsigned left = (w + 1) / 2;
  const unsigned right = w - left;
  // Sorted (key, members) table of all right-hand sums.
  std::vector<std::pair<std::uint64_t, std::array<std::uint32_t, 3>>> table;
  s.combinations(right, false, [&](const Column& sum,
                                   const std::vector<std::uint32_t>& chosen) {
    std::array<std::uint32_t, 3> members{};
    std::copy(chosen.begin(), chosen.end(), members.begin());
    table.emplace_back(s.key(sum), members);
  });
  std::sort(table.begin(), table.end());
  bool found = false;
  s.combinations(left, true, [&](const Column& sum,
                                 const std::vector<std::uint32_t>& chosen) {
    if (found) return;
    const std::uint64_t want = s.key(s.negated(sum));
    auto it = std::lower_bound(
        table.begin(), table.end(), want,
        [](const auto& entry, std::uint64_t k) { return entry.first < k; });
    for (; it != table.end() && it->first == want; ++it) {
      if (disjoint(chosen, std::span(it->second).first(right))) {
        found = true;
        return;
      }
    }
  });
  return found;
}

}  // namespace

std::optional<unsigned> dual_min_distance(const GeneratorMatrix& g,
                                          unsigned limit) {
  if (limit > kMaxDualSearch) {
    throw UsageError("dual distance search limit must be at most " +
                     std::to_string(kMaxDualSearch));
  }
  ColumnSearch s{g.p, g.row_count(), {}};
  if (s.k > kMaxRows) throw UsageError("too many generator rows for dual search");
  double bits = 0;
  for (std::size_t i = 0; i < s.k; ++i) bits += std::log2(static_cast<double>(g.p));
  if (bits >= 63.0) throw UsageError("column space too large for dual search");

  for (std::size_t c = 0; c < g.column_count(); ++c) {
    Column v{};
    for (std::size_t r = 0; r < s.k; ++r) v[r] = static_cast<std::uint8_t>(g.rows[r][c]);
    s.cols.push_back(v);
  }
  if (limit >= 1) {
    for (const auto& v : s.cols) {
      if (is_zero_column(v, s.k)) return 1u;
    }
  }
  if (limit >= 2) {
    // Proportional columns share the same normalised form.
    std::vector<std::uint64_t> normal;
    for (const auto& v : s.cols) {
      std::size_t lead = 0;
      while (v[lead] == 0) ++lead;
      std::uint32_t inv = 1;
      while (inv * v[lead] % s.p != 1) ++inv;
      Column n{};
      for (std::size_t i = 0; i < s.k; ++i) {
        n[i] = static_cast<std::uint8_t>(v[i] * inv % s.p);
      }
      normal.push_back(s.key(n));
    }
    std::sort(normal.begin(), normal.end());
    if (std::adjacent_find(normal.begin(), normal.end()) != normal.end()) return 2u;
  }
  for (unsigned w = 3; w <= limit; ++w) {
    if (dependent_set_of_size(s, w)) return w;
  }
  return std::nullopt;
}

std::optional<unsigned> dual_min_distance(const Code& code, unsigned limit) {
  return dual_min_distance(generator_matrix(code), limit);
}

}  // namespace pncodes
