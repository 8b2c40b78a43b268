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

#include "pncodes/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "pncodes/codes.hpp"
#include "pncodes/errors.hpp"
#include "pncodes/functions.hpp"
#include "pncodes/oracle.hpp"
#include "pncodes/parallel.hpp"
#include "pncodes/serialize.hpp"

namespace pncodes {

namespace {

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::string modulus;
  std::string fn;
  std::optional<std::uint32_t> k;
  std::string u;
  std::string expr;
  std::vector<std::string> bindings;
  std::string variant = "both";
  std::string weights_variant = "cbar";
  std::string checks = "all";
  std::string out_path;
  std::string csv_path;
  unsigned threads = 0;
  bool seedless = false;
  bool perturb = false;
};

void add_instance_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--p", cfg.p, "characteristic (odd prime)")->required();
  cmd.add_option("--m", cfg.m, "extension degree")->required();
  cmd.add_option("--modulus", cfg.modulus,
                 "monic modulus coefficients c0,...,cm, low to high");
  cmd.add_option("--fn", cfg.fn, "catalog function")
      ->check(CLI::IsMember({"square", "do_monomial", "coulter_matthews", "ding_yuan"}));
  cmd.add_option("--k", cfg.k, "catalog parameter k");
  cmd.add_option("--u", cfg.u, "ding_yuan parameter, c0,c1,... or g^k (default g)");
  cmd.add_option("--expr", cfg.expr, "polynomial expression in x");
  cmd.add_option("--bind", cfg.bindings, "parameter binding name=element")
      ->take_all();
  cmd.add_option("--threads", cfg.threads, "worker threads (0: one per core)");
  cmd.add_flag("--seedless", cfg.seedless, "reserved; rejected");
}

Field build_field(const RunConfig& cfg) {
  if (cfg.modulus.empty()) return Field::create(cfg.p, cfg.m);
  FieldSpec spec{cfg.p, cfg.m, {}};
  for (auto part : split(cfg.modulus, ',')) {
    spec.modulus.push_back(static_cast<std::uint32_t>(parse_uint(part, "modulus digit")));
  }
  return Field::from_spec(spec);
}

PNSpec build_function(const RunConfig& cfg, const Field& field) {
  if (!cfg.expr.empty() && !cfg.fn.empty()) {
    throw UsageError("--fn and --expr are mutually exclusive");
  }
  if (!cfg.expr.empty()) {
    std::map<std::string, FieldElement> params;
    for (const auto& b : cfg.bindings) {
      const auto eq = b.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw UsageError("--bind expects name=element, got '" + b + "'");
      }
      params.insert_or_assign(b.substr(0, eq),
                              parse_field_element(std::string_view(b).substr(eq + 1), field));
    }
    return parse_expression(cfg.expr, params, field);
  }
  if (!cfg.bindings.empty()) throw UsageError("--bind only applies to --expr");
  const std::string fn = cfg.fn.empty() ? "square" : cfg.fn;
  if (fn == "square") return PNSpec::square();
  if (fn == "ding_yuan") {
    return PNSpec::ding_yuan(cfg.u.empty() ? field.generator()
                                           : parse_field_element(cfg.u, field));
  }
  if (!cfg.k) throw UsageError("--fn " + fn + " needs --k");
  return fn == "do_monomial" ? PNSpec::do_monomial(*cfg.k)
                             : PNSpec::coulter_matthews(*cfg.k);
}

void apply_threads(const RunConfig& cfg) {
  if (cfg.seedless) {
    throw UsageError("--seedless is reserved: the tool uses no randomness");
  }
  unsigned n = cfg.threads;
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  set_worker_threads(n);
}

// Compiles the function and rejects non-planar ones with a witness.
FunctionTable planar_table(const PNSpec& spec, const Field& field) {
  FunctionTable pi = compile(spec, field);
  if (auto v = find_pn_violation(pi)) {
    throw DomainError(
        "not perfect nonlinear: the difference function D_a(x) = Pi(x+a) - Pi(x) "
        "is not a bijection for a=(" + field.element(v->shift).to_string() +
        "); x1=(" + field.element(v->x1).to_string() + ") and x2=(" +
        field.element(v->x2).to_string() + ") both map to (" +
        field.element(v->difference).to_string() + ")");
  }
  return pi;
}

std::vector<CodeVariant> variants_of(const std::string& v) {
  if (v == "c") return {CodeVariant::kC};
  if (v == "cbar") return {CodeVariant::kCBar};
  return {CodeVariant::kC, CodeVariant::kCBar};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  apply_threads(cfg);
  const Field field = build_field(cfg);
  const PNSpec spec = build_function(cfg, field);
  const FunctionTable pi = planar_table(spec, field);
  VerifyOptions options;
  options.variants = variants_of(cfg.variant);
  options.fast = cfg.checks == "fast";
  options.perturb_weight_count = cfg.perturb;
  const VerificationReport report = verify_instance(pi, to_json(spec), options);
  const std::string json = to_json(report).dump(2) + "\n";
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, report_weights_csv(report));
  if (cfg.out_path.empty()) {
    out << json;
  } else {
    write_file(cfg.out_path, json);
    for (const auto& c : report.checks) {
      out << status_name(c.status) << ' ' << c.name;
      if (!c.variant.empty()) out << " [" << c.variant << ']';
      out << '\n';
    }
    for (const auto& [variant, dist] : report.observed_weights) {
      out << "minimum distance [" << variant << "]: " << dist.min_distance() << '\n';
    }
    out << "overall: " << (report.overall() ? "pass" : "fail") << '\n';
  }
  return report.overall() ? kExitOk : kExitVerificationFailed;
}

int cmd_weights(const RunConfig& cfg, std::ostream& out) {
  apply_threads(cfg);
  const Field field = build_field(cfg);
  const PNSpec spec = build_function(cfg, field);
  const FunctionTable pi = compile(spec, field);
  const Code code(cfg.weights_variant == "c" ? CodeVariant::kC : CodeVariant::kCBar, pi);
  const std::string csv = weight_distribution(code).to_csv();
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, csv);
  out << csv;
  return kExitOk;
}

}  // namespace

FieldElement parse_field_element(std::string_view text, const Field& field) {
  if (text.starts_with("g^")) {
    return field.generator().pow(parse_uint(text.substr(2), "generator power"));
  }
  const auto parts = split(text, ',');
  if (parts.size() > field.m()) {
    throw UsageError("field element '" + std::string(text) + "' has more than m = " +
                     std::to_string(field.m()) + " coefficients");
  }
  std::vector<std::uint32_t> coeffs(field.m(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::uint64_t c = parse_uint(parts[i], "coefficient");
    if (c >= field.p()) {
      throw UsageError("coefficient " + std::to_string(c) + " is not below p = " +
                       std::to_string(field.p()));
    }
    coeffs[i] = static_cast<std::uint32_t>(c);
  }
  return field.from_coeffs(coeffs);
}

std::string catalog_text() {
  return "square            x^2                       any odd p, any m\n"
         "do_monomial       x^(p^k+1)                 m/gcd(m,k) odd\n"
         "coulter_matthews  x^((3^k+1)/2)             p=3, k odd, gcd(m,k)=1\n"
         "ding_yuan         x^10 - u*x^6 - u^2*x^2    p=3, m odd, u != 0 (default u = g)\n"
         "expr              any polynomial via --expr, e.g. \"x^2 + a*x^4\" --bind a=g^3\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Linear codes from perfect nonlinear functions", "pncodes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* list = app.add_subcommand("list-catalog", "list the built-in PN families");

  auto* analyze = app.add_subcommand("analyze", "enumerate and verify an instance");
  add_instance_options(*analyze, cfg);
  analyze->add_option("--variant", cfg.variant, "c, cbar or both")
      ->check(CLI::IsMember({"c", "cbar", "both"}));
  analyze->add_option("--checks", cfg.checks, "all or fast")
      ->check(CLI::IsMember({"all", "fast"}));
  analyze->add_option("--out", cfg.out_path, "write the JSON report here");
  analyze->add_option("--csv", cfg.csv_path, "write predicted/observed weights here");
  analyze->add_flag("--debug-perturb-weight-count", cfg.perturb)->group("");

  auto* weights = app.add_subcommand("weights", "print a weight distribution as CSV");
  add_instance_options(*weights, cfg);
  weights->add_option("--variant", cfg.weights_variant, "c or cbar")
      ->check(CLI::IsMember({"c", "cbar"}));
  weights->add_option("--csv", cfg.csv_path, "also write the CSV here");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(),
                                    args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (list->parsed()) {
      out << catalog_text();
      return kExitOk;
    }
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    return cmd_weights(cfg, out);
  } catch (const ParseError& e) {
    err << "error: expression: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace pncodes
