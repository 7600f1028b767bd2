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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fvs/instance.hpp"
#include "fvs/reductions.hpp"
#include "fvs/rule_table.hpp"
#include "fvs/simple_graph.hpp"

namespace fvs {

struct SolveOptions {
  Family family = Family::kFast;
  double alpha = kDefaultFastAlpha;  // ignored by the simple family, which uses 1
  bool early_cycle_exit = false;
  bool check_measures = true;
  std::size_t trace_limit = 0;  // lines of --explain trace to keep
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t disjoint_calls = 0;
  // Reduction rule names ("R1".."R6", "R1'".."R5'") and branching rule names.
  std::map<std::string, std::uint64_t> rule_histogram;
  std::uint64_t measure_checks = 0;
  std::uint64_t measure_violations = 0;
  std::vector<std::string> violation_samples;
  // Irreducible instances where no guide rule applied and the solver fell back
  // to an elementary branch on a vertex of maximum U-degree.
  std::uint64_t fallback_branches = 0;
  std::vector<std::string> trace;

  void merge(const SolveStats& other);
};

struct DisjointOutcome {
  bool yes = false;
  std::vector<VertexId> certificate;  // origins, sorted
};

// One child produced by a branching rule, before reduction.
struct BranchChild {
  Instance inst;
  std::vector<VertexId> forced;  // origins deleted on the way to this child
  double predicted_drop = 0;     // lower bound granted by the analysis
  std::string path;
};

// Elementary branch on the non-tent D-vertex of maximum U-degree (lowest id
// on ties): delete it, or move it to U.
std::vector<BranchChild> branch_simple(const Instance& inst);

// Finds a guide and runs the matching rule of the shared table. Returns
// std::nullopt if the instance has no guide or no rule matches; the caller
// then falls back to branch_simple.
struct FastBranch {
  rules::BranchRule rule;
  GuideInfo guide;
  std::vector<BranchChild> children;
};
std::optional<FastBranch> branch_fast(const Instance& inst);

// Branch-and-reduce search. The certificate is verified against `inst`
// before returning; a bad certificate throws kVerificationFailure.
DisjointOutcome solve_disjoint(const Instance& inst, const SolveOptions& options,
                               SolveStats& stats);

enum class VertexOrder : std::uint8_t { kInput, kRandom, kDegree };

struct FvsOptions {
  SolveOptions solve;
  VertexOrder order = VertexOrder::kInput;
  std::uint64_t seed = 0;
};

// Parses "input", "degree" or "random:SEED".
void parse_order(const std::string& text, FvsOptions& options);

struct FvsOutcome {
  bool yes = false;
  int k = 0;
  std::vector<int> solution;  // vertex indices, sorted
  SolveStats stats;
};

// Iterative compression: decides whether g has a feedback vertex set of size
// at most k.
FvsOutcome solve_fvs(const SimpleGraph& g, int k, const FvsOptions& options);

// Smallest k with a YES answer, found by ascending k; k - 1 was answered NO.
FvsOutcome solve_fvs_minimum(const SimpleGraph& g, const FvsOptions& options);

}  // namespace fvs
