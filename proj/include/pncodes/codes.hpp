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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pncodes/functions.hpp"
#include "pncodes/spectra.hpp"

namespace pncodes {

// C:    c_{a,b}   = (Tr(a Pi(x) + b x))_{x != 0},    length q - 1
// CBar: c_{a,b,c} = (Tr(a Pi(x) + b x + c))_{x},     length q
enum class CodeVariant { kC, kCBar };

std::string variant_name(CodeVariant v);

// Codeword parameters. For CBar, t = Tr(c) in F_p; two constants with equal
// trace give the same codeword. For C, t is always 0.
struct CodeIndex {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  Residue t = 0;

  friend bool operator==(const CodeIndex&, const CodeIndex&) = default;
};

class Code {
 public:
  // pi must be an F_q -> F_q table.
  Code(CodeVariant variant, FunctionTable pi);

  CodeVariant variant() const { return variant_; }
  const Field& field() const { return pi_.field(); }
  const FunctionTable& pi() const { return pi_; }

  std::uint32_t length() const;
  // 2m for C, 2m+1 for CBar.
  std::uint32_t claimed_dimension() const;
  // Number of parameter tuples: q^2 for C, q^2 p for CBar.
  std::uint64_t index_count() const;

  // Dense numbering of indices: (a q + b) p + t for CBar, a q + b for C.
  std::uint64_t linear(const CodeIndex& i) const;
  CodeIndex from_linear(std::uint64_t n) const;

  // Smallest-index element of F_q with trace t.
  std::uint32_t trace_lift(Residue t) const { return lifts_[t]; }

 private:
  CodeVariant variant_;
  FunctionTable pi_;
  std::vector<std::uint32_t> lifts_;
};

// Hamming weight from the zero fiber of the component function; the
// codeword itself is never built.
std::uint64_t codeword_weight(const Code& code, const CodeIndex& index);

// Builds the codeword coordinate by coordinate with schoolbook field
// arithmetic and the Frobenius trace. Coordinates follow the canonical
// element order, skipping 0 for C.
std::vector<Residue> materialize(const Code& code, const CodeIndex& index);

struct WeightDist {
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t total() const;
  // Smallest nonzero weight with a nonzero count; 0 for the zero code.
  std::uint64_t min_distance() const;
  std::string to_csv() const;

  friend bool operator==(const WeightDist&, const WeightDist&) = default;
};

enum class EnumerationMethod {
  kZeroFiber,    // histogram of Tr(a Pi(x)) + Tr(b x), O(q) per (a, b)
  kMaterialize,  // debug oracle: every codeword built in full
};

WeightDist weight_distribution(const Code& code,
                               EnumerationMethod method = EnumerationMethod::kZeroFiber);

struct CodewordType {
  enum class Kind { kConstant, kBalanced, kSPlus, kSMinus, kOther };
  Kind kind = Kind::kOther;
  // The shape index s, or the constant value for kConstant.
  std::uint32_t s = 0;

  static CodewordType from_class(const DistributionClass& c);
  std::string to_string() const;

  friend bool operator==(const CodewordType&, const CodewordType&) = default;
  friend auto operator<=>(const CodewordType&, const CodewordType&) = default;
};

// Value-distribution type of a CBar codeword.
CodewordType classify_codeword(const Code& code, const CodeIndex& index);
// Types of all CBar codewords, indexed by Code::linear.
std::vector<CodewordType> classify_all(const Code& code);

using TypeCensus = std::map<CodewordType, std::uint64_t>;
TypeCensus type_census(const Code& code);
TypeCensus census_from_types(const std::vector<CodewordType>& types);

struct GeneratorMatrix {
  std::uint32_t p = 0;
  std::vector<std::vector<Residue>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return rows.empty() ? 0 : rows[0].size(); }
  // One line per row, digits without separators.
  std::string to_text() const;
};

// Rows: Tr(e_i Pi(x)) for the basis e_i, then Tr(e_i x), then the all-ones
// row for CBar.
GeneratorMatrix generator_matrix(const Code& code);
std::size_t matrix_rank(const GeneratorMatrix& g);

// Minimum weight of the dual code, i.e. the smallest number of linearly
// dependent columns, if it is at most `limit` (limit <= 6). Sizes up to 2
// are found by normalising columns; larger sizes by meet-in-the-middle on
// sums of scaled columns.
std::optional<unsigned> dual_min_distance(const GeneratorMatrix& g,
                                          unsigned limit);
std::optional<unsigned> dual_min_distance(const Code& code, unsigned limit);

}  // namespace pncodes
