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

// Command-line front end. Talks to the solver only through the C interface.
//
// Exit codes: 0 YES / success, 1 NO / a verification suite failed,
// 2 usage or input error, 3 internal or verification error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fvsgold/fvsgold.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_for(fvs_status status) {
  switch (status) {
    case FVS_OK: return kExitYes;
    case FVS_ERR_INVALID_ARGUMENT:
    case FVS_ERR_PARSE:
    case FVS_ERR_SELF_LOOP:
    case FVS_ERR_EDGE_COUNT:
    case FVS_ERR_CAPACITY: return kExitUsage;
    default: return kExitInternal;
  }
}

int report_failure(fvs_status status) {
  std::cerr << "fvsgold: " << fvs_status_name(status) << ": " << fvs_last_error() << '\n';
  return exit_for(status);
}

// Owns a report string returned by the library.
struct Text {
  char* ptr = nullptr;
  ~Text() { fvs_string_free(ptr); }
};

struct SolveArgs {
  std::string input;
  std::string format = "edgelist";
  int k = -1;
  bool has_k = false;
  std::string algorithm = "fast";
  double alpha = 0.84;
  std::string order = "input";
  bool early_cycle_exit = false;
  bool explain = false;
  bool json = false;
};

int run_solve(const SolveArgs& a) {
  std::ifstream file(a.input, std::ios::binary);
  if (!file) {
    std::cerr << "fvsgold: cannot open '" << a.input << "'\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();

  fvs_graph* graph = nullptr;
  const fvs_format format = a.format == "dimacs" ? FVS_FORMAT_DIMACS : FVS_FORMAT_EDGELIST;
  if (fvs_status s = fvs_graph_parse(text.data(), text.size(), format, &graph); s != FVS_OK) {
    std::cerr << a.input << ": ";
    return report_failure(s);
  }
  for (size_t i = 0; i < fvs_graph_warning_count(graph); ++i) {
    std::cerr << a.input << ": warning: " << fvs_graph_warning(graph, i) << '\n';
  }

  fvs_solve_options options;
  fvs_solve_options_init(&options);
  options.algorithm = a.algorithm == "simple"   ? FVS_ALGORITHM_SIMPLE
                      : a.algorithm == "oracle" ? FVS_ALGORITHM_ORACLE
                                                : FVS_ALGORITHM_FAST;
  options.alpha = a.alpha;
  options.k = a.has_k ? a.k : -1;
  options.order = a.order.c_str();
  options.early_cycle_exit = a.early_cycle_exit ? 1 : 0;
  options.explain = a.explain ? 1 : 0;

  fvs_result* result = nullptr;
  const fvs_status s = fvs_solve(graph, &options, &result);
  fvs_graph_free(graph);
  if (s != FVS_OK) return report_failure(s);
  std::cout << (a.json ? fvs_result_json(result) : fvs_result_text(result));
  if (a.json) std::cout << '\n';
  const int code = fvs_result_answer(result) ? kExitYes : kExitNo;
  fvs_result_free(result);
  return code;
}

bool parse_grid(const std::string& spec, double& lo, double& hi, double& step) {
  std::istringstream in(spec);
  char c1 = 0;
  char c2 = 0;
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':') return false;
  return in.peek() == std::char_traits<char>::eof();
}

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Feedback Vertex Set solver"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fvs_version()));

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide or minimize feedback vertex set size");
  solve_cmd->add_option("--input", solve.input, "Graph file")->required();
  solve_cmd->add_option("--format", solve.format, "Input format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  auto* k_opt = solve_cmd->add_option("--k", solve.k, "Budget; omit to find the minimum")
                    ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--algorithm", solve.algorithm, "Solver")
      ->check(CLI::IsMember({"simple", "fast", "oracle"}));
  solve_cmd->add_option("--alpha", solve.alpha, "Measure weight for the fast algorithm")
      ->check(CLI::Range(0.5, 1.0));
  solve_cmd->add_option("--order", solve.order, "Compression order: input, degree or random:SEED");
  solve_cmd->add_flag("--early-cycle-exit", solve.early_cycle_exit,
                      "Answer NO as soon as the undeletable part has a cycle");
  solve_cmd->add_flag("--explain", solve.explain, "Print the rule trace");
  solve_cmd->add_flag("--json", solve.json, "JSON output");

  std::string family = "fast";
  double alpha = 0;
  std::string grid;
  bool analyze_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Branching-vector running time analysis");
  analyze_cmd->add_option("--family", family, "Rule family")->check(CLI::IsMember({"simple", "fast"}));
  auto* alpha_opt = analyze_cmd->add_option("--alpha", alpha, "Single alpha")->check(CLI::Range(0.5, 1.0));
  auto* grid_opt = analyze_cmd->add_option("--alpha-grid", grid, "Sweep LO:HI:STEP");
  alpha_opt->excludes(grid_opt);
  analyze_cmd->add_flag("--json", analyze_json, "JSON output");

  fvs_verify_options verify;
  fvs_verify_options_init(&verify);
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the solvers against brute force");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest exhaustive graph size")
      ->check(CLI::Range(1, 14));
  verify_cmd->add_option("--trials", verify.trials, "Random cases per suite")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_flag("--json", verify_json, "JSON output");

  std::string bench_family = "fast";
  double bench_alpha = 0;
  std::string generator = "hard";
  std::string sizes = "4,5,6,7,8";
  std::uint64_t bench_seed = 1;
  bool bench_json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Search-tree size against k");
  bench_cmd->add_option("--family", bench_family, "Rule family")
      ->check(CLI::IsMember({"simple", "fast"}));
  bench_cmd->add_option("--alpha", bench_alpha, "Measure weight")->check(CLI::Range(0.5, 1.0));
  bench_cmd->add_option("--generator", generator, "hard or gnp:P");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated budgets (hard) or vertex counts (gnp)");
  bench_cmd->add_option("--seed", bench_seed, "Random seed");
  bench_cmd->add_flag("--json", bench_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*solve_cmd) {
    solve.has_k = k_opt->count() > 0;
    return run_solve(solve);
  }

  if (*analyze_cmd) {
    double lo = family == "simple" ? 1.0 : 0.84;
    double hi = lo;
    double step = 1.0;
    if (alpha_opt->count() > 0) lo = hi = alpha;
    if (grid_opt->count() > 0 && !parse_grid(grid, lo, hi, step)) {
      std::cerr << "fvsgold: --alpha-grid expects LO:HI:STEP\n" << analyze_cmd->help();
      return kExitUsage;
    }
    Text report;
    if (fvs_status s = fvs_analyze(family.c_str(), lo, hi, step, analyze_json, &report.ptr); s != FVS_OK) {
      return report_failure(s);
    }
    std::cout << report.ptr;
    return kExitYes;
  }

  if (*verify_cmd) {
    Text report;
    int passed = 0;
    if (fvs_status s = fvs_verify(&verify, verify_json, &passed, &report.ptr); s != FVS_OK) {
      return report_failure(s);
    }
    std::cout << report.ptr;
    return passed ? kExitYes : kExitNo;
  }

  std::vector<int> size_list;
  try {
    size_list = parse_sizes(sizes);
  } catch (const std::exception&) {
    std::cerr << "fvsgold: --sizes expects a comma-separated list of integers\n";
    return kExitUsage;
  }
  Text report;
  if (fvs_status s = fvs_bench(bench_family.c_str(), bench_alpha, generator.c_str(), size_list.data(),
                               size_list.size(), bench_seed, bench_json, &report.ptr);
      s != FVS_OK) {
    return report_failure(s);
  }
  std::cout << report.ptr;
  return kExitYes;
}
