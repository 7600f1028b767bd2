// Copyright 2026 The fvsgold Authors
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

#include "fvs/report.hpp"

#include <cstdio>
#include <sstream>

namespace fvs::report {

namespace {

std::string num(double x, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

Json params_json(const GuideType& t) { return Json::array({t.f, t.s, t.d}); }

Json vector_json(const analysis::BranchingVector& v) {
  Json symbolic = Json::array();
  for (const auto& d : v.symbolic) symbolic.push_back(rules::to_string(d));
  return Json{{"rule", v.rule},
              {"params", params_json(v.params)},
              {"drops", v.drops},
              {"symbolic", symbolic},
              {"paths", v.paths},
              {"root", analysis::root(v.drops)}};
}

}  // namespace

Json to_json(const SolveReport& r) {
  Json hist = Json::object();
  for (const auto& [name, count] : r.stats.rule_histogram) hist[name] = count;
  Json j{{"version", FVSGOLD_VERSION},
         {"answer", r.yes ? "YES" : "NO"},
         {"k", r.k},
         {"minimum", r.minimum},
         {"algorithm", r.algorithm},
         {"alpha", r.alpha},
         {"certificate", r.certificate},
         {"stats",
          {{"nodes", r.stats.nodes},
           {"leaves", r.stats.leaves},
           {"max_depth", r.stats.max_depth},
           {"disjoint_calls", r.stats.disjoint_calls},
           {"measure_checks", r.stats.measure_checks},
           {"measure_violations", r.stats.measure_violations},
           {"fallback_branches", r.stats.fallback_branches}}},
         {"rule_histogram", hist},
         {"warnings", r.warnings}};
  if (!r.stats.trace.empty()) j["trace"] = r.stats.trace;
  return j;
}

SolveReport solve_report_from_json(const Json& j) {
  SolveReport r;
  r.yes = j.at("answer").get<std::string>() == "YES";
  r.k = j.at("k").get<int>();
  r.minimum = j.at("minimum").get<bool>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.alpha = j.at("alpha").get<double>();
  r.certificate = j.at("certificate").get<std::vector<std::int64_t>>();
  const Json& s = j.at("stats");
  r.stats.nodes = s.at("nodes").get<std::uint64_t>();
  r.stats.leaves = s.at("leaves").get<std::uint64_t>();
  r.stats.max_depth = s.at("max_depth").get<std::uint64_t>();
  r.stats.disjoint_calls = s.at("disjoint_calls").get<std::uint64_t>();
  r.stats.measure_checks = s.at("measure_checks").get<std::uint64_t>();
  r.stats.measure_violations = s.at("measure_violations").get<std::uint64_t>();
  r.stats.fallback_branches = s.at("fallback_branches").get<std::uint64_t>();
  for (const auto& [name, count] : j.at("rule_histogram").items()) {
    r.stats.rule_histogram[name] = count.get<std::uint64_t>();
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (j.contains("trace")) r.stats.trace = j.at("trace").get<std::vector<std::string>>();
  return r;
}

std::string to_text(const SolveReport& r, bool explain) {
  std::ostringstream out;
  out << "answer: " << (r.yes ? "YES" : "NO") << '\n';
  out << "k: " << r.k << (r.minimum ? " (minimum)" : "") << '\n';
  if (r.yes) {
    out << "certificate:";
    for (auto v : r.certificate) out << ' ' << v;
    out << '\n';
  }
  out << "algorithm: " << r.algorithm;
  if (r.algorithm == "fast") out << " (alpha " << r.alpha << ")";
  out << '\n';
  out << "nodes: " << r.stats.nodes << "  leaves: " << r.stats.leaves
      << "  max depth: " << r.stats.max_depth << '\n';
  if (explain) {
    out << "rules:";
    for (const auto& [name, count] : r.stats.rule_histogram) out << ' ' << name << '=' << count;
    out << '\n';
    out << "measure checks: " << r.stats.measure_checks
        << "  violations: " << r.stats.measure_violations << '\n';
    for (const auto& line : r.stats.trace) out << "  " << line << '\n';
  }
  return out.str();
}

Json to_json(const analysis::AlphaReport& r) {
  Json vectors = Json::array();
  for (const auto& v : r.vectors) vectors.push_back(vector_json(v));
  return Json{{"version", FVSGOLD_VERSION},
              {"family", to_string(r.family)},
              {"alpha", r.alpha},
              {"beta", r.beta},
              {"disjoint_base", r.disjoint_base},
              {"exponent_base", r.exponent_base},
              {"worst_rule", r.worst_rule},
              {"worst_params", params_json(r.worst_params)},
              {"vectors", vectors}};
}

Json to_json(const analysis::SweepReport& r) {
  Json table = Json::array();
  for (const auto& row : r.table) {
    table.push_back(Json{{"alpha", row.alpha},
                         {"beta", row.beta},
                         {"disjoint_base", row.disjoint_base},
                         {"exponent_base", row.exponent_base},
                         {"worst_rule", row.worst_rule}});
  }
  Json j = to_json(r.best);
  j["argmin"] = r.best.alpha;
  j["sweep"] = table;
  return j;
}

std::string to_text(const analysis::AlphaReport& r) {
  std::ostringstream out;
  out << "family " << to_string(r.family) << ", alpha " << num(r.alpha, 3) << '\n';
  out << "branching vectors (each rule at its smallest admissible type):\n";
  for (const auto& v : r.vectors) {
    out << "  " << v.rule << " at " << to_string(v.params) << "  root " << num(analysis::root(v.drops))
        << "  drops";
    for (double d : v.drops) out << ' ' << num(d, 3);
    out << '\n';
  }
  out << "beta           " << num(r.beta, 10) << "  (worst: " << r.worst_rule << " at "
      << to_string(r.worst_params) << ")\n";
  out << "disjoint base  " << num(r.disjoint_base) << "  = beta^(1+alpha)\n";
  out << "exponent base  " << num(r.exponent_base) << "  = 1 + beta^(1+alpha)\n";
  return out.str();
}

std::string to_text(const analysis::SweepReport& r) {
  std::ostringstream out;
  out << "alpha    beta          exponent base\n";
  for (const auto& row : r.table) {
    out << num(row.alpha, 3) << "    " << num(row.beta, 8) << "    " << num(row.exponent_base) << '\n';
  }
  out << "argmin alpha " << num(r.best.alpha, 3) << ", exponent base " << num(r.best.exponent_base)
      << "\n\n";
  out << to_text(r.best);
  return out.str();
}

Json to_json(const std::vector<harness::SuiteResult>& suites) {
  Json list = Json::array();
  bool all = true;
  for (const auto& s : suites) {
    all = all && s.passed;
    list.push_back(Json{{"name", s.name},
                        {"passed", s.passed},
                        {"checks", s.checks},
                        {"failures", s.failures},
                        {"seconds", s.seconds},
                        {"detail", s.detail},
                        {"samples", s.samples}});
  }
  return Json{{"version", FVSGOLD_VERSION}, {"passed", all}, {"suites", list}};
}

std::string to_text(const std::vector<harness::SuiteResult>& suites) {
  std::ostringstream out;
  for (const auto& s : suites) {
    out << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << num(s.seconds, 1) << " s): " << s.detail
        << '\n';
    for (const auto& sample : s.samples) out << "    " << sample << '\n';
  }
  return out.str();
}

Json to_json(const std::vector<harness::BenchRow>& rows, const harness::BenchConfig& config) {
  Json list = Json::array();
  for (const auto& r : rows) {
    list.push_back(Json{{"size", r.size},
                        {"k", r.k},
                        {"answer", r.yes ? "YES" : "NO"},
                        {"nodes", r.nodes},
                        {"leaves", r.leaves},
                        {"millis", r.millis}});
  }
  return Json{{"version", FVSGOLD_VERSION},
              {"family", to_string(config.family)},
              {"generator", config.generator},
              {"seed", config.seed},
              {"rows", list}};
}

std::string to_text(const std::vector<harness::BenchRow>& rows, const harness::BenchConfig& config) {
  std::ostringstream out;
  out << "family " << to_string(config.family) << ", generator " << config.generator << '\n';
  out << "size    k  answer       nodes      leaves     ms\n";
  for (const auto& r : rows) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%4d %4d  %-6s %10llu  %10llu  %9.2f\n", r.size, r.k,
                  r.yes ? "YES" : "NO", static_cast<unsigned long long>(r.nodes),
                  static_cast<unsigned long long>(r.leaves), r.millis);
    out << buf;
  }
  return out.str();
}

}  // namespace fvs::report
