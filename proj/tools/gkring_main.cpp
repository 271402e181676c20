/*
 * Copyright 2026 The gkring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// gkring: command-line front end over the gk core library.
//
// Exit codes: 0 success (or "counting measure"), 1 falsified or failed
// verification, 2 input error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gk/arith.hpp"
#include "gk/builtins.hpp"
#include "gk/errors.hpp"
#include "gk/falsify.hpp"
#include "gk/geom.hpp"
#include "gk/json_io.hpp"
#include "gk/kring.hpp"
#include "gk/suites.hpp"

namespace {

using gk::json_io::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::optional<std::uint64_t> q;
  std::string output = "text";
  std::uint64_t seed = 42;
  std::uint64_t enum_limit = gk::ff::kDefaultEnumerationLimit;
  unsigned workers = 0;

  bool json_out() const { return output == "json"; }
  std::uint64_t field_q() const { return q.value_or(2); }
  gk::geom::EnumerationOptions enumeration() const { return {enum_limit, workers}; }
};

void require_q(std::uint64_t q) {
  if (!gk::is_prime_power(q)) {
    throw gk::InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  }
}

// A source is a path to a JSON file, inline JSON, or (for sets and classes)
// a builtin name.
std::optional<json> load_json(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream buf;
    buf << in.rdbuf();
    return gk::json_io::parse(buf.str());
  }
  if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
    return gk::json_io::parse(source);
  }
  return std::nullopt;
}

std::uint64_t json_q(const json& j, const RunConfig& cfg) {
  if (j.is_object() && j.contains("q") && !cfg.q) {
    const auto& v = j.at("q");
    return v.is_string() ? std::stoull(v.get<std::string>()) : v.get<std::uint64_t>();
  }
  return cfg.field_q();
}

gk::geom::ConstructibleSet load_set(const std::string& source, const RunConfig& cfg) {
  if (auto j = load_json(source)) return gk::json_io::set_from_json(*j, json_q(*j, cfg));
  return gk::builtin_set(cfg.field_q(), source);
}

gk::kring::RingElement load_class(const std::string& source, const RunConfig& cfg) {
  if (auto j = load_json(source)) return gk::json_io::ring_element_from_json(*j, json_q(*j, cfg));
  return gk::builtin_class(cfg.field_q(), source);
}

gk::kring::MeasureCandidate load_candidate(const std::string& source) {
  auto j = load_json(source);
  if (!j) throw gk::ParseError("candidate must be a JSON file or inline JSON object");
  return gk::json_io::candidate_from_json(*j);
}

std::string s(const gk::Integer& v) { return gk::to_string(v); }
std::string s(const gk::Rational& v) { return gk::to_string(v); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json tally_json(const gk::geom::ClosedPointTally& tally) { return gk::json_io::to_json(tally); }

// --- subcommands -------------------------------------------------------------

int cmd_tables(const RunConfig& cfg, std::uint64_t kmax, std::uint64_t nmax) {
  const auto q = cfg.field_q();
  require_q(q);
  if (kmax < 1 || nmax < 1) throw gk::InvalidArgument("kmax and nmax must be >= 1");
  if (cfg.json_out()) {
    json c = json::object(), a = json::object(), p = json::object();
    for (std::uint64_t d = 1; d <= kmax; ++d) c[std::to_string(d)] = s(gk::kring::closed_point_count(q, d));
    for (std::uint64_t n = 1; n <= nmax; ++n) {
      json row = json::object();
      for (std::uint64_t i = 0; i <= n; ++i) {
        row[std::to_string(i)] = s(gk::kring::affine_subspace_count(q, n, i));
      }
      a[std::to_string(n)] = row;
      json coeffs = json::array();
      for (const auto& v : gk::kring::omega_polynomial_recursive(q, n)) coeffs.push_back(s(v));
      p[std::to_string(n)] = coeffs;
    }
    emit({{"q", std::to_string(q)}, {"c", c}, {"a", a}, {"P", p}});
    return kExitOk;
  }
  std::cout << "q = " << q << "\n\nclosed points c_d\n";
  for (std::uint64_t d = 1; d <= kmax; ++d) {
    std::cout << "  c_" << d << " = " << s(gk::kring::closed_point_count(q, d)) << '\n';
  }
  std::cout << "\nrational affine subspaces a_{n,i}\n";
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    std::cout << "  n = " << n << ':';
    for (std::uint64_t i = 0; i <= n; ++i) std::cout << ' ' << s(gk::kring::affine_subspace_count(q, n, i));
    std::cout << '\n';
  }
  std::cout << "\n[Omega^n] = P_n(L)\n";
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    const auto cls = gk::kring::from_l_polynomial(q, gk::kring::omega_polynomial_recursive(q, n));
    std::cout << "  P_" << n << " = " << gk::kring::to_string(cls) << '\n';
  }
  return kExitOk;
}

int cmd_count(const RunConfig& cfg, const std::string& source, unsigned n, bool tally) {
  const auto set = load_set(source, cfg);
  const auto count = gk::geom::count_points(set, n, cfg.enumeration());
  std::optional<gk::geom::ClosedPointTally> t;
  if (tally) t = gk::geom::decompose_closed_points(set, n, cfg.enumeration());
  if (cfg.json_out()) {
    json out{{"q", std::to_string(set.q())}, {"n", std::to_string(n)}, {"count", std::to_string(count)}};
    if (t) out["tally"] = tally_json(*t);
    emit(out);
    return kExitOk;
  }
  std::cout << count << '\n';
  if (t) {
    for (const auto& [d, c] : t->counts) std::cout << "N_" << d << " = " << c << '\n';
  }
  return kExitOk;
}

int cmd_closed_points(const RunConfig& cfg, const std::string& source, unsigned max_d) {
  const auto set = load_set(source, cfg);
  const auto tally = gk::geom::decompose_closed_points(set, max_d, cfg.enumeration());
  if (cfg.json_out()) {
    emit({{"q", std::to_string(set.q())}, {"tally", tally_json(tally)}});
    return kExitOk;
  }
  for (const auto& [d, c] : tally.counts) std::cout << "N_" << d << " = " << c << '\n';
  return kExitOk;
}

int cmd_class(const RunConfig& cfg, const std::string& source, std::optional<std::uint64_t> n) {
  const auto cls = load_class(source, cfg);
  std::optional<gk::Rational> value;
  if (n) value = gk::kring::evaluate(cls, gk::kring::counting_measure(cls.q(), *n));
  if (cfg.json_out()) {
    json out{{"name", source}, {"class", gk::json_io::to_json(cls)}};
    if (value) {
      out["n"] = std::to_string(*n);
      out["value"] = s(*value);
    }
    emit(out);
    return kExitOk;
  }
  std::cout << '[' << source << "] = " << gk::kring::to_string(cls) << '\n';
  if (value) std::cout << "mu_" << *n << " = " << s(*value) << '\n';
  return kExitOk;
}

int cmd_measure(const RunConfig& cfg, const std::string& source, std::optional<std::uint64_t> n,
                const std::optional<std::string>& candidate) {
  if (n.has_value() == candidate.has_value()) {
    throw gk::InvalidArgument("give exactly one of --n or --candidate");
  }
  const auto cls = load_class(source, cfg);
  const auto measure = n ? gk::kring::counting_measure(cls.q(), *n) : load_candidate(*candidate);
  const auto value = gk::kring::evaluate(cls, measure);
  if (cfg.json_out()) {
    emit({{"class", gk::json_io::to_json(cls)},
          {"measure", gk::json_io::to_json(measure)},
          {"value", s(value)}});
    return kExitOk;
  }
  std::cout << s(value) << '\n';
  return kExitOk;
}

int cmd_falsify(const RunConfig& cfg, const std::string& source, std::uint64_t spec_limit,
                bool probes) {
  const auto q = cfg.field_q();
  require_q(q);
  const auto cand = load_candidate(source);
  gk::falsify::ClassifyOptions opts;
  opts.spec_index_limit = spec_limit;
  opts.enumeration = cfg.enumeration();
  if (!probes) opts.probes = std::vector<gk::geom::PolySystem>{};
  const auto verdict = gk::falsify::classify(q, cand, opts);
  if (verdict.is_counting_measure()) {
    if (cfg.json_out()) {
      emit({{"verdict", "counting measure"},
            {"n", std::to_string(*verdict.counting_n)},
            {"probes_checked", std::to_string(verdict.probes_checked)}});
    } else {
      std::cout << "counting measure n = " << *verdict.counting_n << '\n';
    }
    return kExitOk;
  }
  const auto& w = *verdict.witness;
  if (cfg.json_out()) {
    emit({{"verdict", "falsified"}, {"witness", gk::json_io::to_json(w)}});
  } else {
    std::cout << "falsified by " << gk::falsify::to_string(w.construction) << ": value "
              << s(w.value) << '\n'
              << gk::json_io::to_json(w).dump(2) << '\n';
  }
  return kExitNegative;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  const auto report = gk::suites::run_suite(suite, cfg.seed, cfg.enumeration());
  if (cfg.json_out()) {
    emit({{"suite", report.name},
          {"seed", std::to_string(cfg.seed)},
          {"passed", report.passed},
          {"lines", report.lines}});
  } else {
    for (const auto& line : report.lines) std::cout << line << '\n';
  }
  return report.passed ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classes, counting measures and positivity witnesses over F_q"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::uint64_t q_value = 0;
  auto* q_opt = app.add_option("--q", q_value, "Base field size (a prime power, default 2)");
  app.add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized campaigns")->capture_default_str();
  app.add_option("--enum-limit", cfg.enum_limit, "Largest point set one enumeration may visit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "Enumeration threads (0 = hardware concurrency)");

  std::uint64_t kmax = 6, nmax = 4;
  auto* tables = app.add_subcommand("tables", "c_d, a_{n,i} and the Omega polynomials");
  tables->add_option("--kmax", kmax, "Largest d for c_d")->capture_default_str();
  tables->add_option("--nmax", nmax, "Largest n for a_{n,i} and P_n")->capture_default_str();

  std::string set_source;
  unsigned n_points = 1;
  bool tally = false;
  auto* count = app.add_subcommand("count", "|V(F_{q^n})| by enumeration");
  count->add_option("set", set_source, "Builtin name, JSON file or inline JSON")->required();
  count->add_option("--n", n_points, "Extension degree")->required()->check(CLI::PositiveNumber);
  count->add_flag("--tally", tally, "Also report N_d for d <= n");

  unsigned max_d = 1;
  auto* closed = app.add_subcommand("closed-points", "N_d for d = 1..max-degree");
  closed->add_option("set", set_source, "Builtin name, JSON file or inline JSON")->required();
  closed->add_option("--max-degree", max_d, "Largest residue degree")
      ->required()
      ->check(CLI::PositiveNumber);

  std::string class_source;
  std::optional<std::uint64_t> class_n;
  auto* cls = app.add_subcommand("class", "Class of a builtin in K_0");
  cls->add_option("name", class_source, "Builtin name or RingElement JSON")->required();
  cls->add_option("--n", class_n, "Also evaluate under the counting measure mu_n");

  std::optional<std::uint64_t> measure_n;
  std::optional<std::string> measure_candidate;
  auto* measure = app.add_subcommand("measure", "Evaluate a class under a measure");
  measure->add_option("class", class_source, "Builtin name or RingElement JSON")->required();
  measure->add_option("--n", measure_n, "Counting measure mu_n");
  measure->add_option("--candidate", measure_candidate, "Candidate JSON file or inline JSON");

  std::string candidate_source;
  std::uint64_t spec_limit = 24;
  bool no_probes = false;
  auto* falsify = app.add_subcommand("falsify", "Classify a candidate measure");
  falsify->add_option("candidate", candidate_source, "Candidate JSON file or inline JSON")->required();
  falsify->add_option("--spec-limit", spec_limit, "Spec indices checked for consistency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  falsify->add_flag("--no-probes", no_probes, "Skip the point-count probes on accepted candidates");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a seeded property campaign");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(gk::suites::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (*q_opt) cfg.q = q_value;

  try {
    if (cfg.q) require_q(*cfg.q);
    if (*tables) return cmd_tables(cfg, kmax, nmax);
    if (*count) return cmd_count(cfg, set_source, n_points, tally);
    if (*closed) return cmd_closed_points(cfg, set_source, max_d);
    if (*cls) return cmd_class(cfg, class_source, class_n);
    if (*measure) return cmd_measure(cfg, class_source, measure_n, measure_candidate);
    if (*falsify) return cmd_falsify(cfg, candidate_source, spec_limit, !no_probes);
    if (*verify) return cmd_verify(cfg, suite);
  } catch (const gk::Error& e) {
    std::cerr << "gkring: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "gkring: malformed JSON input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gkring: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
