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

#include "fvs/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "fvs/error.hpp"

namespace fvs::analysis {

namespace {

// The guide's subtree as plain counters: U-degree, parent and children.
// Vertex 0 stands for the guide's parent, whose own state is never inspected.
struct AbstractVertex {
  int u_degree = 0;
  int parent = -1;
  std::vector<int> children;
  bool alive = true;
};

struct AbstractState {
  std::vector<AbstractVertex> v;
};

class AbstractBackend {
 public:
  using Handle = int;
  using State = AbstractState;

  static State witness(const GuideType& t) {
    State st;
    st.v.push_back(AbstractVertex{});
    const int guide = add(st, 0, t.f);
    for (int i = 0; i < t.s; ++i) add(st, guide, 3);
    for (int i = 0; i < t.d; ++i) {
      const int dbl = add(st, guide, 0);
      add(st, dbl, 3);
      add(st, dbl, 3);
    }
    // Guides with f >= 3 may be roots; the parent never matters for them.
    return st;
  }

  Handle select(const State& st, rules::Select sel, Handle source, int index) const {
    int seen = 0;
    for (int c : st.v[source].children) {
      const bool ok = sel == rules::Select::kChildOf ||
                      (sel == rules::Select::kSingleChild && is_single(st, c)) ||
                      (sel == rules::Select::kDoubleChild && is_double(st, c));
      if (ok && seen++ == index) return c;
    }
    fail(ErrorCode::kRuleTable, "abstract model has no vertex for a rule role");
  }

  GuideType guide_type(const State& st, Handle h) const {
    GuideType t{st.v[h].u_degree, 0, 0};
    for (int c : st.v[h].children) {
      if (is_single(st, c)) {
        ++t.s;
      } else if (is_double(st, c)) {
        ++t.d;
      } else {
        fail(ErrorCode::kRuleTable, "abstract guide has a standard child");
      }
    }
    return t;
  }

  int u_degree(const State& st, Handle h) const { return st.v[h].u_degree; }

  std::pair<State, State> branch(const State& st, Handle h) const {
    State deleted = st;
    detach(deleted, h, false);
    State fixed = st;
    detach(fixed, h, true);
    return {std::move(deleted), std::move(fixed)};
  }

  void move_to_u(State& st, Handle h) const {
    if (degree(st, h) != 2 || st.v[h].u_degree < 1) {
      fail(ErrorCode::kRuleTable, "degree-2 move applied to an ineligible vertex");
    }
    detach(st, h, true);
  }

  void dissolve(State& st, Handle h) const {
    AbstractVertex& x = st.v[h];
    if (x.u_degree != 0 || x.parent < 0 || x.children.size() != 1) {
      fail(ErrorCode::kRuleTable, "contraction applied to an ineligible vertex");
    }
    const int p = x.parent;
    const int c = x.children.front();
    std::replace(st.v[p].children.begin(), st.v[p].children.end(), h, c);
    st.v[c].parent = p;
    x.alive = false;
    x.children.clear();
  }

  void make_tent(State& st, Handle h) const {
    AbstractVertex& x = st.v[h];
    if (x.u_degree != 2 || d_degree(st, h) != 1) {
      fail(ErrorCode::kRuleTable, "subdivision applied to an ineligible vertex");
    }
    // The D-neighbour gains the new U-vertex.
    const int n = x.parent >= 0 ? x.parent : x.children.front();
    ++st.v[n].u_degree;
    detach(st, h, false);
  }

  void expect_tent(const State& st, Handle h) const {
    if (d_degree(st, h) != 0 || st.v[h].u_degree != 3) {
      fail(ErrorCode::kRuleTable, "rule expects a tent that did not appear");
    }
  }

 private:
  static int add(State& st, int parent, int u_degree) {
    const int id = static_cast<int>(st.v.size());
    st.v.push_back(AbstractVertex{u_degree, parent, {}, true});
    st.v[parent].children.push_back(id);
    return id;
  }

  static bool is_single(const State& st, int h) {
    return st.v[h].u_degree == 3 && st.v[h].children.empty() && st.v[h].parent >= 0;
  }

  static bool is_double(const State& st, int h) {
    const auto& kids = st.v[h].children;
    return st.v[h].u_degree == 0 && kids.size() == 2 && is_single(st, kids[0]) &&
           is_single(st, kids[1]);
  }

  static int d_degree(const State& st, int h) {
    return static_cast<int>(st.v[h].children.size()) + (st.v[h].parent >= 0 ? 1 : 0);
  }

  static int degree(const State& st, int h) { return d_degree(st, h) + st.v[h].u_degree; }

  // Removes h from D. When it moves to U its D-neighbours gain a U-neighbour.
  static void detach(State& st, int h, bool to_u) {
    AbstractVertex& x = st.v[h];
    if (x.parent >= 0) {
      auto& siblings = st.v[x.parent].children;
      siblings.erase(std::remove(siblings.begin(), siblings.end(), h), siblings.end());
      if (to_u) ++st.v[x.parent].u_degree;
    }
    for (int c : x.children) {
      st.v[c].parent = -1;
      if (to_u) ++st.v[c].u_degree;
    }
    x.children.clear();
    x.parent = -1;
    x.alive = false;
  }
};

double branching_number(const BranchingVector& v) { return root(v.drops); }

}  // namespace

BranchingVector expand_rule(rules::BranchRule id, const GuideType& params, double alpha) {
  const rules::RuleSpec& spec = rules::rule(id);
  if (!spec.pattern.matches(params)) {
    fail(ErrorCode::kInvalidArgument,
         "type " + to_string(params) + " is not admissible for rule " + spec.name);
  }
  AbstractBackend backend;
  rules::Interpreter<AbstractBackend> interp(backend);
  const auto state = AbstractBackend::witness(params);
  const auto leaves = interp.run(id, state, 1);

  BranchingVector out{spec.name, params, {}, {}, {}};
  for (const auto& leaf : leaves) {
    out.symbolic.push_back(leaf.drop);
    out.drops.push_back(leaf.drop.at(alpha));
    out.paths.push_back(leaf.path);
  }
  return out;
}

BranchingVector expand_simple(int f, double alpha) {
  BranchingVector out{"branch-on-max-U-degree", GuideType{f, 0, 0}, {}, {}, {"D", "F"}};
  out.symbolic = {rules::delete_drop(), rules::fix_drop(f)};
  for (const auto& d : out.symbolic) out.drops.push_back(d.at(alpha));
  return out;
}

double root(std::span<const double> drops) {
  if (drops.empty()) fail(ErrorCode::kInvalidArgument, "empty branching vector");
  for (double d : drops) {
    if (!(d > 0)) fail(ErrorCode::kInvalidArgument, "branching vector has a non-positive drop");
  }
  if (drops.size() == 1) return 1.0;
  auto excess = [&](double x) {
    double sum = 0;
    for (double d : drops) sum += std::pow(x, -d);
    return sum - 1.0;
  };
  double lo = 1.0;
  double hi = 2.0;
  while (excess(hi) > 0) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<GuideType> admissible_types(int max_f, int max_s, int max_d) {
  std::vector<GuideType> out;
  for (int f = 0; f <= max_f; ++f) {
    for (int s = 0; s <= max_s; ++s) {
      for (int d = 0; d <= max_d; ++d) {
        const GuideType t{f, s, d};
        if (!is_forbidden_guide_type(t)) out.push_back(t);
      }
    }
  }
  return out;
}

AlphaReport analyze(double alpha, Family family) {
  if (alpha < 0.5 || alpha > 1.0) fail(ErrorCode::kInvalidArgument, "alpha must lie in [1/2, 1]");
  AlphaReport report;
  report.family = family;
  report.alpha = alpha;
  report.beta = 0;

  auto consider = [&](const BranchingVector& v) {
    const double b = branching_number(v);
    if (b > report.beta) {
      report.beta = b;
      report.worst_rule = v.rule;
      report.worst_params = v.params;
    }
  };

  if (family == Family::kSimple) {
    report.vectors.push_back(expand_simple(3, alpha));
    for (int f = 3; f <= kHorizonF; ++f) consider(expand_simple(f, alpha));
  } else {
    for (const rules::RuleSpec& spec : rules::rule_table()) {
      report.vectors.push_back(expand_rule(spec.id, spec.pattern.minimum(), alpha));
    }
    for (const GuideType& t : admissible_types(kHorizonF, kHorizonSD, kHorizonSD)) {
      const auto id = rules::dispatch(t);
      if (!id) fail(ErrorCode::kRuleTable, "no rule matches guide type " + to_string(t));
      consider(expand_rule(*id, t, alpha));
    }
  }
  report.disjoint_base = std::pow(report.beta, 1.0 + alpha);
  report.exponent_base = 1.0 + report.disjoint_base;
  return report;
}

SweepReport sweep(Family family, double lo, double hi, double step) {
  if (lo < 0.5 || hi > 1.0 || lo > hi) fail(ErrorCode::kInvalidArgument, "alpha grid must lie in [1/2, 1]");
  if (!(step > 0)) fail(ErrorCode::kInvalidArgument, "alpha grid step must be positive");
  SweepReport out;
  const int points = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (int i = 0; i < points; ++i) {
    const double alpha = std::min(hi, lo + i * step);
    out.table.push_back(analyze(alpha, family));
    if (out.table.size() == 1 || out.table.back().exponent_base < out.best.exponent_base) {
      out.best = out.table.back();
    }
  }
  return out;
}

}  // namespace fvs::analysis
