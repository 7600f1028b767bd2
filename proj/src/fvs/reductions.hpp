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
#include <functional>
#include <string>
#include <vector>

#include "fvs/instance.hpp"

namespace fvs {

enum class ReductionRule : std::uint8_t {
  kNone,
  // Simple family (alpha = 1, G[U] kept acyclic).
  kLowDegree,      // remove any vertex of degree <= 1
  kTwoNeighbours,  // D-vertex with two neighbours in one tree of G[U]: delete it
  kDegreeTwo,      // degree-2 D-vertex: move to U or contract
  kMeasureBound,   // mu <= ell / 2: NO
  kSubdivide,      // D-leaf of U-degree 2: subdivide its D-edge into U
  kTentPoly,       // every D-vertex a tent: matroid parity
  // Fast family (general alpha, G[U] may contain cycles).
  kLowDegreeFast,
  kDegreeTwoFast,
  kMeasureBoundFast,
  kSubdivideFast,
  kTentPolyFast,
  kEarlyCycleExit,
};

const char* to_string(ReductionRule rule);

enum class OutcomeKind : std::uint8_t { kChanged, kNoInstance, kPolySolved, kIrreducible };

const char* to_string(OutcomeKind kind);

struct TraceEntry {
  ReductionRule rule = ReductionRule::kNone;
  std::vector<VertexId> vertices;  // instance ids touched by the rule
  double measure_before = 0;       // mu (simple) or mu_alpha (fast)
  double measure_after = 0;
};

struct RuleOutcome {
  OutcomeKind kind = OutcomeKind::kIrreducible;
  ReductionRule rule = ReductionRule::kNone;
  // Origins of vertices deleted into the solution by this application.
  std::vector<VertexId> forced;
  // kPolySolved only: whether the tent case had a solution within budget, and
  // that solution as origins.
  bool poly_yes = false;
  std::vector<VertexId> certificate;
  TraceEntry trace;
};

struct ReduceOptions {
  // Fast family only: answer NO as soon as G[U] has a cycle.
  bool early_cycle_exit = false;
};

// Apply the lowest-numbered applicable rule of the respective family once.
RuleOutcome reduce_simple(Instance& inst);
RuleOutcome reduce_fast(Instance& inst, const ReduceOptions& options = {});
RuleOutcome reduce_step(Instance& inst, Family family, const ReduceOptions& options = {});

using ReductionObserver = std::function<void(const RuleOutcome&)>;

// Reduces until an answer or an irreducible instance. The returned outcome
// accumulates every forced deletion; `observer` sees each single application.
RuleOutcome reduce_to_fixpoint(Instance& inst, Family family, const ReduceOptions& options = {},
                               const ReductionObserver& observer = {});

}  // namespace fvs
