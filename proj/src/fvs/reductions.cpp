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

#include "fvs/reductions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_set>

#include "fvs/error.hpp"
#include "fvs/poly_case.hpp"

namespace fvs {

namespace {

constexpr double kEps = 1e-9;

double family_measure(const Instance& inst, Family family) {
  const Measures m = measures(inst);
  return family == Family::kSimple ? m.mu : m.mu_alpha;
}

// Counts edge incidences of v per G[U] component; true if some component is
// hit at least twice.
bool hits_a_tree_twice(const Instance& inst, VertexId v, const std::vector<int>& comp) {
  std::map<int, std::uint32_t> hits;
  for (const auto& [w, m] : inst.graph.neighbors(v)) {
    if (!inst.in_u(w)) continue;
    if ((hits[comp[index_of(w)]] += m) >= 2) return true;
  }
  return false;
}

void delete_into_solution(Instance& inst, VertexId v, RuleOutcome& out) {
  out.forced.push_back(inst.origin(v));
  inst.remove_vertex(v);
  --inst.k;
}

// Contracts the degree-2 D-vertex v into its lowest-id neighbour w. Every cycle
// through v passes through w, so the merged vertex stands for w.
VertexId dissolve_into_neighbour(Instance& inst, VertexId v) {
  const VertexId w = inst.graph.neighbors(v).begin()->first;
  const VertexId origin = inst.origin(w);
  inst.labels.erase(v);
  inst.labels.erase(w);
  const VertexId x = inst.graph.contract_edge(v, w);
  inst.labels.emplace(x, Instance::Label{Side::kD, origin});
  return x;
}

std::optional<VertexId> first_d(const Instance& inst, const auto& pred) {
  std::optional<VertexId> found;
  inst.graph.for_each_vertex([&](VertexId v) {
    if (!found && inst.in_d(v) && pred(v)) found = v;
  });
  return found;
}

bool all_tents(const Instance& inst) {
  return !first_d(inst, [&](VertexId v) { return !inst.is_tent(v); });
}

// D-leaf of U-degree 2: subdivide the edge to its D-neighbour and put the new
// vertex into U.
bool try_subdivide(Instance& inst, RuleOutcome& out) {
  const auto v = first_d(inst, [&](VertexId x) {
    return inst.d_degree(x) == 1 && inst.u_degree(x) == 2;
  });
  if (!v) return false;
  VertexId w{};
  for (const auto& [n, m] : inst.graph.neighbors(*v)) {
    if (inst.in_d(n)) w = n;
  }
  const VertexId x = inst.graph.subdivide_edge(*v, w);
  inst.labels.emplace(x, Instance::Label{Side::kU, x});
  out.trace.vertices = {*v, w, x};
  return true;
}

void solve_tents(Instance& inst, RuleOutcome& out) {
  out.kind = OutcomeKind::kPolySolved;
  if (inst.k < 0) {
    out.poly_yes = false;
    return;
  }
  const TentSolution sol = solve_tent_instance(make_tent_instance(inst));
  out.poly_yes = sol.yes;
  if (sol.yes) {
    for (VertexId v : sol.deletion) out.certificate.push_back(inst.origin(v));
  }
}

RuleOutcome finish(Instance& inst, Family family, RuleOutcome out, double before) {
  out.trace.rule = out.rule;
  out.trace.measure_before = before;
  out.trace.measure_after = out.kind == OutcomeKind::kChanged ? family_measure(inst, family) : before;
  return out;
}

}  // namespace

RuleOutcome reduce_simple(Instance& inst) {
  if (inst.alpha != 1.0) fail(ErrorCode::kInternalState, "simple family requires alpha = 1");
  const double before = family_measure(inst, Family::kSimple);
  RuleOutcome out;
  out.kind = OutcomeKind::kChanged;

  std::optional<VertexId> low;
  inst.graph.for_each_vertex([&](VertexId v) {
    if (!low && inst.graph.degree(v) <= 1) low = v;
  });
  if (low) {
    out.rule = ReductionRule::kLowDegree;
    out.trace.vertices = {*low};
    inst.remove_vertex(*low);
    return finish(inst, Family::kSimple, out, before);
  }

  if (!u_is_forest(inst)) fail(ErrorCode::kInternalState, "simple family requires G[U] acyclic");
  const std::vector<int> comp = u_component_labels(inst);
  if (auto v = first_d(inst, [&](VertexId x) { return hits_a_tree_twice(inst, x, comp); })) {
    out.rule = ReductionRule::kTwoNeighbours;
    out.trace.vertices = {*v};
    delete_into_solution(inst, *v, out);
    return finish(inst, Family::kSimple, out, before);
  }

  if (auto v = first_d(inst, [&](VertexId x) { return inst.graph.degree(x) == 2; })) {
    out.rule = ReductionRule::kDegreeTwo;
    if (inst.u_degree(*v) > 0) {
      inst.labels.at(*v).side = Side::kU;
      out.trace.vertices = {*v};
    } else {
      out.trace.vertices = {*v, dissolve_into_neighbour(inst, *v)};
    }
    return finish(inst, Family::kSimple, out, before);
  }

  const Measures m = measures(inst);
  if (inst.k < 0 || (m.ell >= 1 && 2 * m.mu <= m.ell)) {
    out.rule = ReductionRule::kMeasureBound;
    out.kind = OutcomeKind::kNoInstance;
    return finish(inst, Family::kSimple, out, before);
  }

  if (try_subdivide(inst, out)) {
    out.rule = ReductionRule::kSubdivide;
    return finish(inst, Family::kSimple, out, before);
  }

  if (all_tents(inst)) {
    out.rule = ReductionRule::kTentPoly;
    solve_tents(inst, out);
    return finish(inst, Family::kSimple, out, before);
  }

  out.kind = OutcomeKind::kIrreducible;
  return finish(inst, Family::kSimple, out, before);
}

RuleOutcome reduce_fast(Instance& inst, const ReduceOptions& options) {
  const double before = family_measure(inst, Family::kFast);
  RuleOutcome out;
  out.kind = OutcomeKind::kChanged;

  if (options.early_cycle_exit && !u_is_forest(inst)) {
    out.rule = ReductionRule::kEarlyCycleExit;
    out.kind = OutcomeKind::kNoInstance;
    return finish(inst, Family::kFast, out, before);
  }

  if (auto v = first_d(inst, [&](VertexId x) { return inst.graph.degree(x) <= 1; })) {
    out.rule = ReductionRule::kLowDegreeFast;
    out.trace.vertices = {*v};
    inst.remove_vertex(*v);
    return finish(inst, Family::kFast, out, before);
  }

  if (auto v = first_d(inst, [&](VertexId x) { return inst.graph.degree(x) == 2; })) {
    out.rule = ReductionRule::kDegreeTwoFast;
    out.trace.vertices = {*v};
    const int f = inst.u_degree(*v);
    if (f == 0) {
      out.trace.vertices.push_back(dissolve_into_neighbour(inst, *v));
    } else if (f == 2 && hits_a_tree_twice(inst, *v, u_component_labels(inst))) {
      // Both neighbours in one tree of G[U]: v lies on a cycle that nothing
      // else can break, so it belongs to every solution. Moving it to U would
      // turn a YES-instance into a NO-instance.
      delete_into_solution(inst, *v, out);
    } else {
      inst.labels.at(*v).side = Side::kU;
    }
    return finish(inst, Family::kFast, out, before);
  }

  const Measures m = measures(inst);
  const bool has_u = !inst.u_vertices().empty();
  if (inst.k < 0 || (has_u && m.mu_alpha <= (inst.alpha - 0.5) * m.ell_prime + kEps)) {
    out.rule = ReductionRule::kMeasureBoundFast;
    out.kind = OutcomeKind::kNoInstance;
    return finish(inst, Family::kFast, out, before);
  }

  if (try_subdivide(inst, out)) {
    out.rule = ReductionRule::kSubdivideFast;
    return finish(inst, Family::kFast, out, before);
  }

  if (all_tents(inst)) {
    out.rule = ReductionRule::kTentPolyFast;
    if (!u_is_forest(inst)) {
      out.kind = OutcomeKind::kNoInstance;
      return finish(inst, Family::kFast, out, before);
    }
    // Without the two-neighbour rule a tent may touch one tree twice; such a
    // tent is in every solution.
    const std::vector<int> comp = u_component_labels(inst);
    for (VertexId v : inst.d_vertices()) {
      if (hits_a_tree_twice(inst, v, comp)) {
        out.trace.vertices.push_back(v);
        delete_into_solution(inst, v, out);
      }
    }
    solve_tents(inst, out);
    return finish(inst, Family::kFast, out, before);
  }

  out.kind = OutcomeKind::kIrreducible;
  return finish(inst, Family::kFast, out, before);
}

RuleOutcome reduce_step(Instance& inst, Family family, const ReduceOptions& options) {
  return family == Family::kSimple ? reduce_simple(inst) : reduce_fast(inst, options);
}

RuleOutcome reduce_to_fixpoint(Instance& inst, Family family, const ReduceOptions& options,
                               const ReductionObserver& observer) {
  std::vector<VertexId> forced;
  for (;;) {
    RuleOutcome step = reduce_step(inst, family, options);
    if (observer) observer(step);
    forced.insert(forced.end(), step.forced.begin(), step.forced.end());
    if (step.kind != OutcomeKind::kChanged) {
      step.forced = std::move(forced);
      return step;
    }
  }
}

const char* to_string(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::kNone: return "none";
    case ReductionRule::kLowDegree: return "R1";
    case ReductionRule::kTwoNeighbours: return "R2";
    case ReductionRule::kDegreeTwo: return "R3";
    case ReductionRule::kMeasureBound: return "R4";
    case ReductionRule::kSubdivide: return "R5";
    case ReductionRule::kTentPoly: return "R6";
    case ReductionRule::kLowDegreeFast: return "R1'";
    case ReductionRule::kDegreeTwoFast: return "R2'";
    case ReductionRule::kMeasureBoundFast: return "R3'";
    case ReductionRule::kSubdivideFast: return "R4'";
    case ReductionRule::kTentPolyFast: return "R5'";
    case ReductionRule::kEarlyCycleExit: return "cycle-exit";
  }
  return "?";
}

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kChanged: return "changed";
    case OutcomeKind::kNoInstance: return "no-instance";
    case OutcomeKind::kPolySolved: return "poly-solved";
    case OutcomeKind::kIrreducible: return "irreducible";
  }
  return "?";
}

}  // namespace fvs
