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

#include <cctype>

#include "pncodes/errors.hpp"
#include "pncodes/functions.hpp"

namespace pncodes {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text,
                   const std::map<std::string, FieldElement>& params,
                   const Field& field)
      : text_(text), params_(params), field_(field) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = take() == '-';
    }
    terms.push_back(term(negate));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      take();
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  Term term(bool negate) {
    FieldElement coef = field_.one();
    std::optional<std::uint64_t> exponent;
    while (true) {
      skip_space();
      const std::size_t start = pos_;
      if (at_end()) fail("expected a factor");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::uint64_t v = integer();
        coef = coef * field_.from_int(static_cast<std::int64_t>(v % field_.p()));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::string name = identifier();
        std::optional<std::uint64_t> power;
        skip_space();
        std::size_t power_pos = pos_;
        if (peek() == '^') {
          take();
          skip_space();
          power_pos = pos_;
          power = integer();
        }
        if (name == "x") {
          if (exponent) fail_at("variable x appears twice in one term", start);
          const std::uint64_t e = power.value_or(1);
          if (e == 0) fail_at("exponent of x must be at least 1", power_pos);
          if (e >= field_.q()) {
            fail_at("exponent " + std::to_string(e) + " is not below q = " +
                        std::to_string(field_.q()),
                    power_pos);
          }
          exponent = e;
        } else {
          coef = coef * resolve(name, start).pow(power.value_or(1));
        }
      } else {
        fail("expected an integer, a parameter or x");
      }
      skip_space();
      if (peek() == '*') {
        take();
        continue;
      }
      break;
    }
    if (negate) coef = -coef;
    return Term{coef, exponent.value_or(0)};
  }

  FieldElement resolve(const std::string& name, std::size_t at) {
    if (auto it = params_.find(name); it != params_.end()) {
      if (!(it->second.spec() == field_.spec())) {
        fail_at("parameter '" + name + "' belongs to a different field", at);
      }
      return field_.element(it->second.index());
    }
    if (name == "g") return field_.generator();
    fail_at("unbound parameter '" + name + "'", at);
  }

  std::uint64_t integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected an integer");
    }
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t d = static_cast<std::uint64_t>(take() - '0');
      if (v > (UINT64_MAX - d) / 10) fail_at("integer too large", start);
      v = v * 10 + d;
    }
    return v;
  }

  std::string identifier() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      out.push_back(take());
    }
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) {
    throw ParseError(what, at);
  }

  std::string_view text_;
  const std::map<std::string, FieldElement>& params_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

PNSpec parse_expression(std::string_view text,
                        const std::map<std::string, FieldElement>& params,
                        const Field& field) {
  PNSpec spec;
  spec.kind = PNKind::kExpression;
  spec.expr = std::string(text);
  spec.params = params;
  spec.terms = ExpressionParser(text, params, field).parse();
  return spec;
}

}  // namespace pncodes
