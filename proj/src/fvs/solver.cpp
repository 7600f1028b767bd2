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

#include "fvs/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <random>
#include <unordered_set>

#include "fvs/disjoint_sets.hpp"
#include "fvs/error.hpp"

namespace fvs {

namespace {

constexpr double kEps = 1e-9;

double measure_of(const Instance& inst, Family family) {
  const Measures m = measures(inst);
  return family == Family::kSimple ? m.mu : m.mu_alpha;
}

std::string describe(const std::vector<VertexId>& vs) {
  std::string out;
  for (VertexId v : vs) {
    if (!out.empty()) out += ' ';
    out += 'v' + std::to_string(index_of(v));
  }
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// The rule-table backend acting on real instances. Parent pointers come from
// the rooted view taken at the guide; children are the remaining D-neighbours.
struct ConcreteState {
  Instance inst;
  std::map<VertexId, std::optional<VertexId>> parent;
  std::vector<VertexId> forced;
};

class ConcreteBackend {
 public:
  using Handle = VertexId;
  using State = ConcreteState;

  static std::vector<VertexId> children(const State& st, VertexId h) {
    const auto it = st.parent.find(h);
    const std::optional<VertexId> up = it == st.parent.end() ? std::nullopt : it->second;
    std::vector<VertexId> out;
    for (const auto& [w, m] : st.inst.graph.neighbors(h)) {
      if (st.inst.in_d(w) && w != up) out.push_back(w);
    }
    return out;
  }

  Handle select(const State& st, rules::Select sel, Handle source, int index) const {
    int seen = 0;
    for (VertexId c : children(st, source)) {
      const bool ok = sel == rules::Select::kChildOf ||
                      (sel == rules::Select::kSingleChild && is_single(st, c)) ||
                      (sel == rules::Select::kDoubleChild && is_double(st, c));
      if (ok && seen++ == index) return c;
    }
    fail(ErrorCode::kRuleTable, "instance has no vertex for a rule role at v" +
                                    std::to_string(index_of(source)));
  }

  GuideType guide_type(const State& st, Handle h) const {
    GuideType t{st.inst.u_degree(h), 0, 0};
    for (VertexId c : children(st, h)) {
      if (is_single(st, c)) {
        ++t.s;
      } else if (is_double(st, c)) {
        ++t.d;
      } else {
        fail(ErrorCode::kRuleTable, "guide v" + std::to_string(index_of(h)) + " has a standard child");
      }
    }
    return t;
  }

  int u_degree(const State& st, Handle h) const { return st.inst.u_degree(h); }

  std::pair<State, State> branch(const State& st, Handle h) const {
    State deleted = st;
    deleted.forced.push_back(deleted.inst.origin(h));
    deleted.inst.remove_vertex(h);
    --deleted.inst.k;
    State fixed = st;
    fixed.inst.labels.at(h).side = Side::kU;
    return {std::move(deleted), std::move(fixed)};
  }

  void move_to_u(State& st, Handle h) const {
    // With a D-neighbour left, any solution using h can use that neighbour.
    if (st.inst.graph.degree(h) != 2 || st.inst.u_degree(h) != 1) {
      fail(ErrorCode::kRuleTable, "degree-2 move at ineligible v" + std::to_string(index_of(h)));
    }
    st.inst.labels.at(h).side = Side::kU;
  }

  void dissolve(State& st, Handle h) const {
    const auto kids = children(st, h);
    if (st.inst.graph.degree(h) != 2 || st.inst.u_degree(h) != 0 || kids.size() != 1) {
      fail(ErrorCode::kRuleTable, "contraction at ineligible v" + std::to_string(index_of(h)));
    }
    const VertexId c = kids.front();
    const VertexId origin = st.inst.origin(c);
    st.inst.labels.erase(h);
    st.inst.labels.erase(c);
    const VertexId x = st.inst.graph.contract_edge(h, c);
    st.inst.labels.emplace(x, Instance::Label{Side::kD, origin});
    st.parent[x] = st.parent[h];
    st.parent.erase(h);
    st.parent.erase(c);
  }

  void make_tent(State& st, Handle h) const {
    if (st.inst.u_degree(h) != 2 || st.inst.d_degree(h) != 1) {
      fail(ErrorCode::kRuleTable, "subdivision at ineligible v" + std::to_string(index_of(h)));
    }
    VertexId w{};
    for (const auto& [n, m] : st.inst.graph.neighbors(h)) {
      if (st.inst.in_d(n)) w = n;
    }
    const VertexId x = st.inst.graph.subdivide_edge(h, w);
    st.inst.labels.emplace(x, Instance::Label{Side::kU, x});
    st.parent[h] = std::nullopt;
  }

  void expect_tent(const State& st, Handle h) const {
    if (!st.inst.is_tent(h)) {
      fail(ErrorCode::kRuleTable, "expected v" + std::to_string(index_of(h)) + " to be a tent");
    }
  }

 private:
  static bool is_single(const State& st, VertexId c) {
    return st.inst.u_degree(c) == 3 && st.inst.d_degree(c) == 1;
  }

  static bool is_double(const State& st, VertexId c) {
    if (st.inst.u_degree(c) != 0 || st.inst.d_degree(c) != 3) return false;
    const auto kids = children(st, c);
    return kids.size() == 2 && is_single(st, kids[0]) && is_single(st, kids[1]);
  }
};

std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Removes the certificate from `inst` and checks the result.
void verify_certificate(const Instance& inst, const std::vector<VertexId>& cert) {
  const std::unordered_set<VertexId> cut(cert.begin(), cert.end());
  if (cut.size() != cert.size()) fail(ErrorCode::kVerificationFailure, "certificate repeats a vertex");
  if (static_cast<int>(cert.size()) > inst.k) {
    fail(ErrorCode::kVerificationFailure, "certificate exceeds the budget");
  }
  std::size_t hit = 0;
  inst.graph.for_each_vertex([&](VertexId v) {
    if (!cut.contains(inst.origin(v))) return;
    if (!inst.in_d(v)) fail(ErrorCode::kVerificationFailure, "certificate deletes a U-vertex");
    ++hit;
  });
  if (hit != cert.size()) fail(ErrorCode::kVerificationFailure, "certificate names an unknown vertex");
  if (!is_forest_if(inst.graph, [&](VertexId v) { return !cut.contains(inst.origin(v)); })) {
    fail(ErrorCode::kVerificationFailure, "certificate leaves a cycle");
  }
}

class Search {
 public:
  Search(const SolveOptions& options, SolveStats& stats) : options_(options), stats_(stats) {}

  std::optional<std::vector<VertexId>> run(Instance inst, std::uint64_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    ReduceOptions ropts;
    ropts.early_cycle_exit = options_.early_cycle_exit;
    const RuleOutcome r = reduce_to_fixpoint(inst, options_.family, ropts,
                                             [&](const RuleOutcome& o) { observe(o); });
    if (r.kind == OutcomeKind::kNoInstance) {
      ++stats_.leaves;
      return std::nullopt;
    }
    if (r.kind == OutcomeKind::kPolySolved) {
      ++stats_.leaves;
      if (!r.poly_yes) return std::nullopt;
      std::vector<VertexId> cert = r.forced;
      cert.insert(cert.end(), r.certificate.begin(), r.certificate.end());
      return cert;
    }

    std::vector<BranchChild> children;
    std::string rule_name;
    if (options_.family == Family::kFast) {
      if (auto fb = branch_fast(inst)) {
        rule_name = rules::rule(fb->rule).name;
        children = std::move(fb->children);
      }
    }
    if (rule_name.empty()) {
      if (options_.family == Family::kFast) ++stats_.fallback_branches;
      rule_name = "branch";
      children = branch_simple(inst);
      if (options_.family == Family::kFast) {
        // The simple drops assume alpha = 1; rescale the fix drop.
        const double f = children[1].predicted_drop + 1;
        children[1].predicted_drop = (f - 1) * inst.alpha;
      }
    }
    ++stats_.rule_histogram[rule_name];
    note(std::string(depth, ' ') + rule_name + " -> " + std::to_string(children.size()) +
         " children");

    const double before = measure_of(inst, options_.family);
    for (BranchChild& child : children) {
      if (options_.check_measures) {
        const double drop = before - measure_of(child.inst, options_.family);
        check(drop >= child.predicted_drop - kEps,
              rule_name + " branch " + child.path + ": drop " + fmt(drop) + " < predicted " +
                  fmt(child.predicted_drop));
      }
      if (auto sub = run(std::move(child.inst), depth + 1)) {
        std::vector<VertexId> cert = r.forced;
        cert.insert(cert.end(), child.forced.begin(), child.forced.end());
        cert.insert(cert.end(), sub->begin(), sub->end());
        return cert;
      }
    }
    return std::nullopt;
  }

 private:
  void observe(const RuleOutcome& o) {
    if (o.kind == OutcomeKind::kIrreducible) return;
    ++stats_.rule_histogram[to_string(o.rule)];
    const TraceEntry& t = o.trace;
    note(std::string(to_string(o.rule)) + " " + describe(t.vertices) + " measure " +
         fmt(t.measure_before) + " -> " + fmt(t.measure_after));
    if (!options_.check_measures || o.kind != OutcomeKind::kChanged) return;
    const double drop = t.measure_before - t.measure_after;
    if (o.rule == ReductionRule::kSubdivideFast) {
      check(drop >= 1.0 - options_.alpha - kEps, "R4' dropped the measure by only " + fmt(drop));
    } else {
      check(drop >= -kEps, std::string(to_string(o.rule)) + " increased the measure by " + fmt(-drop));
    }
  }

  void check(bool ok, const std::string& what) {
    ++stats_.measure_checks;
    if (ok) return;
    ++stats_.measure_violations;
    if (stats_.violation_samples.size() < 16) stats_.violation_samples.push_back(what);
  }

  void note(std::string line) {
    if (stats_.trace.size() < options_.trace_limit) stats_.trace.push_back(std::move(line));
  }

  const SolveOptions& options_;
  SolveStats& stats_;
};

}  // namespace

void SolveStats::merge(const SolveStats& o) {
  nodes += o.nodes;
  leaves += o.leaves;
  max_depth = std::max(max_depth, o.max_depth);
  disjoint_calls += o.disjoint_calls;
  for (const auto& [name, count] : o.rule_histogram) rule_histogram[name] += count;
  measure_checks += o.measure_checks;
  measure_violations += o.measure_violations;
  for (const auto& s : o.violation_samples) {
    if (violation_samples.size() < 16) violation_samples.push_back(s);
  }
  fallback_branches += o.fallback_branches;
  trace.insert(trace.end(), o.trace.begin(), o.trace.end());
}

std::vector<BranchChild> branch_simple(const Instance& inst) {
  std::optional<VertexId> best;
  int best_f = -1;
  for (VertexId v : inst.d_vertices()) {
    if (inst.is_tent(v)) continue;
    const int f = inst.u_degree(v);
    if (f > best_f) {
      best = v;
      best_f = f;
    }
  }
  if (!best) fail(ErrorCode::kInternalState, "no non-tent D-vertex to branch on");

  std::vector<BranchChild> out(2);
  out[0].inst = inst;
  out[0].forced = {inst.origin(*best)};
  out[0].inst.remove_vertex(*best);
  --out[0].inst.k;
  out[0].predicted_drop = rules::delete_drop().at(inst.alpha);
  out[0].path = "D";
  out[1].inst = inst;
  out[1].inst.labels.at(*best).side = Side::kU;
  out[1].predicted_drop = rules::fix_drop(best_f).at(1.0);
  out[1].path = "F";
  return out;
}

std::optional<FastBranch> branch_fast(const Instance& inst) {
  const RootedView view = classify(inst);
  GuideInfo guide;
  try {
    guide = find_guide(view);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoGuide) return std::nullopt;
    throw;
  }
  const auto id = rules::dispatch(guide.type);
  if (!id) return std::nullopt;

  ConcreteState state{inst, view.parent, {}};
  ConcreteBackend backend;
  rules::Interpreter<ConcreteBackend> interp(backend);
  auto leaves = interp.run(*id, state, guide.vertex);

  FastBranch out{*id, guide, {}};
  for (auto& leaf : leaves) {
    out.children.push_back(BranchChild{std::move(leaf.state.inst), std::move(leaf.state.forced),
                                       leaf.drop.at(inst.alpha), leaf.path});
  }
  return out;
}

DisjointOutcome solve_disjoint(const Instance& inst, const SolveOptions& options, SolveStats& stats) {
  SolveOptions opts = options;
  Instance work = inst;
  if (opts.family == Family::kSimple) {
    opts.alpha = 1.0;
  } else if (opts.alpha < 0.5 || opts.alpha > 1.0) {
    fail(ErrorCode::kInvalidArgument, "alpha must lie in [1/2, 1]");
  }
  work.alpha = opts.alpha;
  if (!d_is_forest(work)) fail(ErrorCode::kInvalidArgument, "G[D] must be a forest");
  if (opts.family == Family::kSimple && !u_is_forest(work)) {
    // The simple family needs an acyclic G[U]; a cycle there is a NO anyway.
    ++stats.disjoint_calls;
    ++stats.nodes;
    ++stats.leaves;
    return {};
  }
  ++stats.disjoint_calls;
  Search search(opts, stats);
  auto cert = search.run(std::move(work), 0);
  if (!cert) return {};
  DisjointOutcome out{true, sorted(std::move(*cert))};
  verify_certificate(inst, out.certificate);
  return out;
}

void parse_order(const std::string& text, FvsOptions& options) {
  if (text == "input") {
    options.order = VertexOrder::kInput;
  } else if (text == "degree") {
    options.order = VertexOrder::kDegree;
  } else if (text.rfind("random:", 0) == 0) {
    options.order = VertexOrder::kRandom;
    try {
      std::size_t used = 0;
      options.seed = std::stoull(text.substr(7), &used);
      if (used != text.size() - 7) throw std::invalid_argument(text);
    } catch (const std::logic_error&) {
      fail(ErrorCode::kInvalidArgument, "bad seed in order '" + text + "'");
    }
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown vertex order '" + text + "'");
  }
}

namespace {

std::vector<int> vertex_order(const SimpleGraph& g, const FvsOptions& options) {
  std::vector<int> order(static_cast<std::size_t>(g.n));
  std::iota(order.begin(), order.end(), 0);
  if (options.order == VertexOrder::kRandom) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(order.begin(), order.end(), rng);
  } else if (options.order == VertexOrder::kDegree) {
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (const auto& [a, b] : g.edges) {
      ++deg[static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(b)];
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });
  }
  return order;
}

// Subsets of {0..size-1} except the full set, by increasing cardinality.
std::vector<std::uint32_t> proper_subsets_by_size(std::size_t size) {
  std::vector<std::uint32_t> masks((std::size_t{1} << size) - 1);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

}  // namespace

FvsOutcome solve_fvs(const SimpleGraph& g, int k, const FvsOptions& options) {
  validate(g);
  FvsOutcome out;
  out.k = k;
  if (k < 0) return out;
  if (k >= 30) fail(ErrorCode::kCapacityExceeded, "budget too large for subset guessing");

  const std::vector<int> order = vertex_order(g, options);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (const auto& [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> present(static_cast<std::size_t>(g.n), false);
  std::vector<int> x;  // solution of the current prefix graph

  for (int v : order) {
    present[static_cast<std::size_t>(v)] = true;
    std::vector<int> z = x;
    z.push_back(v);
    if (static_cast<int>(z.size()) <= k) {
      x = std::move(z);
      continue;
    }

    std::vector<bool> in_z(static_cast<std::size_t>(g.n), false);
    for (int w : z) in_z[static_cast<std::size_t>(w)] = true;

    bool found = false;
    for (std::uint32_t mask : proper_subsets_by_size(z.size())) {
      std::vector<bool> in_y(static_cast<std::size_t>(g.n), false);
      std::vector<int> y;
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (mask >> i & 1u) {
          in_y[static_cast<std::size_t>(z[i])] = true;
          y.push_back(z[i]);
        }
      }
      // G_i[Z \ Y] must be a forest.
      DisjointSets sets(static_cast<std::size_t>(g.n));
      bool acyclic = true;
      for (int a : z) {
        if (in_y[static_cast<std::size_t>(a)]) continue;
        for (int b : adj[static_cast<std::size_t>(a)]) {
          if (a < b && in_z[static_cast<std::size_t>(b)] && !in_y[static_cast<std::size_t>(b)] &&
              !sets.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) {
            acyclic = false;
          }
        }
      }
      if (!acyclic) continue;

      Instance inst;
      inst.k = k - static_cast<int>(y.size());
      inst.alpha = options.solve.family == Family::kSimple ? 1.0 : options.solve.alpha;
      std::vector<VertexId> id_of(static_cast<std::size_t>(g.n));
      for (int w = 0; w < g.n; ++w) {
        if (!present[static_cast<std::size_t>(w)] || in_y[static_cast<std::size_t>(w)]) continue;
        id_of[static_cast<std::size_t>(w)] =
            inst.add_vertex(in_z[static_cast<std::size_t>(w)] ? Side::kU : Side::kD,
                            vertex_id(static_cast<std::uint32_t>(w)));
      }
      for (const auto& [a, b] : g.edges) {
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        if (present[ua] && present[ub] && !in_y[ua] && !in_y[ub]) {
          inst.graph.add_edge(id_of[ua], id_of[ub]);
        }
      }
      const DisjointOutcome d = solve_disjoint(inst, options.solve, out.stats);
      if (!d.yes) continue;
      x = y;
      for (VertexId c : d.certificate) x.push_back(static_cast<int>(index_of(c)));
      found = true;
      break;
    }
    if (!found) return out;
  }

  std::sort(x.begin(), x.end());
  std::vector<int> prefix_check = x;
  if (static_cast<int>(x.size()) > k || !is_forest_without(g, prefix_check)) {
    fail(ErrorCode::kVerificationFailure, "compression produced an invalid solution");
  }
  out.yes = true;
  out.solution = std::move(x);
  return out;
}

FvsOutcome solve_fvs_minimum(const SimpleGraph& g, const FvsOptions& options) {
  SolveStats total;
  for (int k = 0;; ++k) {
    FvsOutcome r = solve_fvs(g, k, options);
    total.merge(r.stats);
    if (r.yes) {
      r.stats = std::move(total);
      return r;
    }
  }
}

}  // namespace fvs
