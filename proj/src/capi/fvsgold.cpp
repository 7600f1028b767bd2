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

#include "fvsgold/fvsgold.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "fvs/analysis.hpp"
#include "fvs/error.hpp"
#include "fvs/graph_io.hpp"
#include "fvs/harness.hpp"
#include "fvs/oracle.hpp"
#include "fvs/report.hpp"
#include "fvs/solver.hpp"

struct fvs_graph {
  fvs::SimpleGraph graph;
  std::vector<std::string> warnings;
};

struct fvs_result {
  fvs::report::SolveReport report;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

fvs_status status_of(fvs::ErrorCode code) {
  using fvs::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return FVS_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return FVS_ERR_PARSE;
    case ErrorCode::kSelfLoop: return FVS_ERR_SELF_LOOP;
    case ErrorCode::kEdgeCountMismatch: return FVS_ERR_EDGE_COUNT;
    case ErrorCode::kCapacityExceeded: return FVS_ERR_CAPACITY;
    case ErrorCode::kVerificationFailure: return FVS_ERR_VERIFICATION;
    default: return FVS_ERR_INTERNAL;
  }
}

fvs_status set_error(fvs_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
fvs_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return FVS_OK;
  } catch (const fvs::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FVS_ERR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FVS_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fvs::Family family_of(const char* name) {
  const std::string s = name ? name : "fast";
  if (s == "simple") return fvs::Family::kSimple;
  if (s == "fast") return fvs::Family::kFast;
  fvs::fail(fvs::ErrorCode::kInvalidArgument, "unknown family '" + s + "'");
}

void require(bool ok, const char* what) {
  if (!ok) fvs::fail(fvs::ErrorCode::kInvalidArgument, what);
}

}  // namespace

extern "C" {

const char* fvs_version(void) { return FVSGOLD_VERSION; }

const char* fvs_last_error(void) { return last_error.c_str(); }

const char* fvs_status_name(fvs_status status) {
  switch (status) {
    case FVS_OK: return "ok";
    case FVS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FVS_ERR_PARSE: return "parse error";
    case FVS_ERR_SELF_LOOP: return "self-loop";
    case FVS_ERR_EDGE_COUNT: return "edge count mismatch";
    case FVS_ERR_CAPACITY: return "capacity exceeded";
    case FVS_ERR_VERIFICATION: return "verification failure";
    case FVS_ERR_INTERNAL: return "internal error";
    case FVS_ERR_NO_MEMORY: return "out of memory";
  }
  return "unknown status";
}

fvs_status fvs_graph_parse(const char* text, size_t length, fvs_format format, fvs_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(text != nullptr || length == 0, "null text");
    require(format == FVS_FORMAT_EDGELIST || format == FVS_FORMAT_DIMACS, "unknown format");
    auto parsed = fvs::parse_graph(std::string_view(text ? text : "", length),
                                   format == FVS_FORMAT_EDGELIST ? fvs::GraphFormat::kEdgelist
                                                                 : fvs::GraphFormat::kDimacs);
    *out = new fvs_graph{std::move(parsed.graph), std::move(parsed.warnings)};
  });
}

fvs_status fvs_graph_new(int vertex_count, fvs_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(vertex_count >= 0, "negative vertex count");
    *out = new fvs_graph{};
    (*out)->graph.n = vertex_count;
  });
}

fvs_status fvs_graph_add_edge(fvs_graph* graph, int u, int v) {
  return guarded([&] {
    require(graph != nullptr, "null graph");
    auto& g = graph->graph;
    require(u >= 0 && v >= 0 && u < g.n && v < g.n, "edge endpoint out of range");
    if (u == v) fvs::fail(fvs::ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    const auto e = std::minmax(u, v);
    if (std::find(g.edges.begin(), g.edges.end(), std::pair(e.first, e.second)) != g.edges.end()) {
      graph->warnings.push_back("duplicate edge " + std::to_string(u) + " " + std::to_string(v) + " ignored");
      return;
    }
    g.edges.push_back({e.first, e.second});
  });
}

int fvs_graph_vertex_count(const fvs_graph* graph) { return graph ? graph->graph.n : 0; }

int fvs_graph_edge_count(const fvs_graph* graph) {
  return graph ? static_cast<int>(graph->graph.edges.size()) : 0;
}

size_t fvs_graph_warning_count(const fvs_graph* graph) { return graph ? graph->warnings.size() : 0; }

const char* fvs_graph_warning(const fvs_graph* graph, size_t index) {
  if (!graph || index >= graph->warnings.size()) return nullptr;
  return graph->warnings[index].c_str();
}

void fvs_graph_free(fvs_graph* graph) { delete graph; }

void fvs_solve_options_init(fvs_solve_options* options) {
  if (!options) return;
  *options = fvs_solve_options{FVS_ALGORITHM_FAST, 0.0, -1, nullptr, 0, 0};
}

fvs_status fvs_solve(const fvs_graph* graph, const fvs_solve_options* options, fvs_result** out) {
  return guarded([&] {
    require(graph != nullptr && options != nullptr && out != nullptr, "null argument");
    const fvs::SimpleGraph& g = graph->graph;
    fvs::validate(g);

    fvs::report::SolveReport rep;
    rep.warnings = graph->warnings;
    rep.minimum = options->k < 0;
    std::vector<int> solution;

    if (options->algorithm == FVS_ALGORITHM_ORACLE) {
      rep.algorithm = "oracle";
      solution = fvs::oracle::brute_fvs(g);
      const int size = static_cast<int>(solution.size());
      rep.k = rep.minimum ? size : options->k;
      rep.yes = size <= rep.k;
      if (!rep.yes) solution.clear();
    } else {
      require(options->algorithm == FVS_ALGORITHM_SIMPLE || options->algorithm == FVS_ALGORITHM_FAST,
              "unknown algorithm");
      fvs::FvsOptions fo;
      fo.solve.family = options->algorithm == FVS_ALGORITHM_SIMPLE ? fvs::Family::kSimple
                                                                   : fvs::Family::kFast;
      fo.solve.alpha = options->alpha == 0.0 ? fvs::kDefaultFastAlpha : options->alpha;
      require(fo.solve.alpha >= 0.5 && fo.solve.alpha <= 1.0, "alpha must lie in [0.5, 1]");
      fo.solve.early_cycle_exit = options->early_cycle_exit != 0;
      fo.solve.trace_limit = options->explain ? 400 : 0;
      fvs::parse_order(options->order ? options->order : "input", fo);
      rep.algorithm = fvs::to_string(fo.solve.family);
      rep.alpha = fo.solve.family == fvs::Family::kFast ? fo.solve.alpha : 1.0;
      const fvs::FvsOutcome r = rep.minimum ? fvs::solve_fvs_minimum(g, fo)
                                            : fvs::solve_fvs(g, options->k, fo);
      rep.yes = r.yes;
      rep.k = r.k;
      rep.stats = r.stats;
      solution = r.solution;
    }

    if (rep.yes) {
      if (static_cast<int>(solution.size()) > rep.k || !fvs::is_forest_without(g, solution)) {
        fvs::fail(fvs::ErrorCode::kVerificationFailure, "certificate failed re-verification");
      }
      for (int v : solution) rep.certificate.push_back(g.label(v));
      std::sort(rep.certificate.begin(), rep.certificate.end());
    }
    auto* result = new fvs_result{std::move(rep), {}, {}};
    result->json = fvs::report::to_json(result->report).dump(2);
    result->text = fvs::report::to_text(result->report, options->explain != 0);
    *out = result;
  });
}

int fvs_result_answer(const fvs_result* result) { return result && result->report.yes ? 1 : 0; }

int fvs_result_k(const fvs_result* result) { return result ? result->report.k : 0; }

size_t fvs_result_certificate_size(const fvs_result* result) {
  return result ? result->report.certificate.size() : 0;
}

int64_t fvs_result_certificate_vertex(const fvs_result* result, size_t index) {
  if (!result || index >= result->report.certificate.size()) return -1;
  return result->report.certificate[index];
}

const char* fvs_result_json(const fvs_result* result) { return result ? result->json.c_str() : ""; }

const char* fvs_result_text(const fvs_result* result) { return result ? result->text.c_str() : ""; }

void fvs_result_free(fvs_result* result) { delete result; }

fvs_status fvs_analyze(const char* family, double alpha_lo, double alpha_hi, double step, int json,
                       char** report) {
  return guarded([&] {
    require(report != nullptr, "null output pointer");
    const fvs::Family fam = family_of(family);
    std::string out;
    if (alpha_lo == alpha_hi) {
      const auto r = fvs::analysis::analyze(alpha_lo, fam);
      out = json ? fvs::report::to_json(r).dump(2) + "\n" : fvs::report::to_text(r);
    } else {
      const auto r = fvs::analysis::sweep(fam, alpha_lo, alpha_hi, step);
      out = json ? fvs::report::to_json(r).dump(2) + "\n" : fvs::report::to_text(r);
    }
    *report = copy_out(out);
  });
}

void fvs_verify_options_init(fvs_verify_options* options) {
  if (!options) return;
  *options = fvs_verify_options{7, 200, 1};
}

fvs_status fvs_verify(const fvs_verify_options* options, int json, int* all_passed, char** report) {
  return guarded([&] {
    require(options != nullptr && all_passed != nullptr && report != nullptr, "null argument");
    require(options->max_n >= 1 && options->max_n <= 14, "max_n must lie in 1..14");
    require(options->trials >= 0, "trials must be non-negative");
    using namespace fvs::harness;
    ExactnessConfig ec;
    ec.enumerate_up_to = std::min(options->max_n, 8);
    ec.random_samples = options->trials;
    ec.random_max_n = options->max_n;
    ec.seed = options->seed;
    const auto exact = exactness_suite(ec);
    std::vector<SuiteResult> suites{exact.exactness, exact.measures};
    suites.push_back(reduction_safeness_suite(options->trials * 10, std::min(options->max_n, 10),
                                              options->seed + 1));
    suites.push_back(parity_suite(options->trials, 8, options->seed + 2));
    suites.push_back(nobound_suite(options->trials, options->seed + 3));
    suites.push_back(disjoint_suite(options->trials, options->max_n, options->seed + 4));
    bool ok = true;
    for (const auto& s : suites) ok = ok && s.passed;
    *all_passed = ok ? 1 : 0;
    *report = copy_out(json ? fvs::report::to_json(suites).dump(2) + "\n" : fvs::report::to_text(suites));
  });
}

fvs_status fvs_bench(const char* family, double alpha, const char* generator, const int* sizes,
                     size_t count, uint64_t seed, int json, char** report) {
  return guarded([&] {
    require(report != nullptr, "null output pointer");
    require(sizes != nullptr || count == 0, "null sizes");
    fvs::harness::BenchConfig config;
    config.family = family_of(family);
    config.alpha = alpha == 0.0 ? fvs::kDefaultFastAlpha : alpha;
    config.generator = generator ? generator : "hard";
    config.sizes.assign(sizes, sizes + count);
    config.seed = seed;
    const auto rows = fvs::harness::bench(config);
    *report = copy_out(json ? fvs::report::to_json(rows, config).dump(2) + "\n"
                            : fvs::report::to_text(rows, config));
  });
}

void fvs_string_free(char* text) { std::free(text); }

}  // extern "C"
