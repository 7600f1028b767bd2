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

#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "fvs/analysis.hpp"
#include "fvs/error.hpp"
#include "fvs/harness.hpp"
#include "fvs/instance.hpp"
#include "fvs/oracle.hpp"
#include "fvs/rule_table.hpp"
#include "fvs/simple_graph.hpp"
#include "fvs/solver.hpp"

using fvs::vertex_id;

namespace {

using Edges = std::vector<std::pair<int, int>>;

fvs::SimpleGraph complete(int n) {
  fvs::SimpleGraph g{n, {}, {}};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.edges.push_back({a, b});
  }
  return g;
}

fvs::SimpleGraph petersen() {
  fvs::SimpleGraph g{10, {}, {}};
  for (int i = 0; i < 5; ++i) {
    g.edges.push_back({i, (i + 1) % 5});
    g.edges.push_back({i, i + 5});
    g.edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return g;
}

fvs::FvsOptions options_for(fvs::Family family) {
  fvs::FvsOptions o;
  o.solve.family = family;
  return o;
}

const fvs::Family kFamilies[] = {fvs::Family::kSimple, fvs::Family::kFast};

// A guide of type (f, s, d) below a root parent. Every D-vertex gets fresh
// U-neighbours so all U-components are single vertices.
fvs::Instance witness(const fvs::GuideType& t) {
  Edges edges;
  std::vector<int> d{0, 1};
  int next = 2;
  auto fresh_u = [&](int v, int count) {
    for (int i = 0; i < count; ++i) edges.push_back({v, next++});
  };
  auto single_below = [&](int parent) {
    const int s = next++;
    d.push_back(s);
    edges.push_back({parent, s});
    return s;
  };
  edges.push_back({0, 1});
  std::vector<int> singles;
  for (int i = 0; i < t.s; ++i) singles.push_back(single_below(1));
  for (int i = 0; i < t.d; ++i) {
    const int c = single_below(1);
    singles.push_back(single_below(c));
    singles.push_back(single_below(c));
  }
  fresh_u(0, 3);
  fresh_u(1, t.f);
  for (int s : singles) fresh_u(s, 3);
  return fvs::make_instance(next, edges, d, 40, 0.84);
}

}  // namespace

TEST_CASE("a forest needs no deletions") {
  const fvs::SimpleGraph path{4, {{0, 1}, {1, 2}, {2, 3}}, {}};
  for (auto family : kFamilies) {
    const auto out = fvs::solve_fvs(path, 0, options_for(family));
    CHECK(out.yes);
    CHECK(out.solution.empty());
    CHECK(fvs::solve_fvs_minimum(path, options_for(family)).k == 0);
  }
}

TEST_CASE("K4 needs two deletions") {
  const auto k4 = complete(4);
  for (auto family : kFamilies) {
    CHECK_FALSE(fvs::solve_fvs(k4, 1, options_for(family)).yes);
    const auto yes = fvs::solve_fvs(k4, 2, options_for(family));
    REQUIRE(yes.yes);
    CHECK(yes.solution.size() == 2);
    CHECK(fvs::is_forest_without(k4, yes.solution));
  }
}

TEST_CASE("the Petersen graph needs three deletions") {
  const auto g = petersen();
  CHECK(fvs::oracle::brute_fvs(g).size() == 3);
  for (auto family : kFamilies) {
    const auto out = fvs::solve_fvs_minimum(g, options_for(family));
    CHECK(out.k == 3);
    CHECK(fvs::is_forest_without(g, out.solution));
  }
}

TEST_CASE("vertex orders give the same minimum") {
  const auto g = petersen();
  for (const char* order : {"input", "degree", "random:9"}) {
    auto o = options_for(fvs::Family::kFast);
    fvs::parse_order(order, o);
    CHECK(fvs::solve_fvs_minimum(g, o).k == 3);
  }
  fvs::FvsOptions o;
  fvs::parse_order("random:42", o);
  CHECK(o.order == fvs::VertexOrder::kRandom);
  CHECK(o.seed == 42);
  CHECK_THROWS_AS(fvs::parse_order("sideways", o), fvs::Error);
}

TEST_CASE("a negative budget is NO") {
  CHECK_FALSE(fvs::solve_fvs(complete(3), -1, options_for(fvs::Family::kFast)).yes);
}

TEST_CASE("empty D: YES iff G[U] is a forest") {
  const std::vector<int> none;
  fvs::SolveStats stats;
  fvs::SolveOptions opts;
  const auto forest = fvs::make_instance(3, Edges{{0, 1}, {1, 2}}, none, 0, 0.84);
  CHECK(fvs::solve_disjoint(forest, opts, stats).yes);
  const auto cyclic = fvs::make_instance(3, Edges{{0, 1}, {1, 2}, {2, 0}}, none, 2, 0.84);
  CHECK_FALSE(fvs::solve_disjoint(cyclic, opts, stats).yes);
}

TEST_CASE("many tents against few components is NO without branching") {
  fvs::harness::Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto inst = fvs::harness::random_nobound_instance(rng);
    for (auto family : kFamilies) {
      fvs::SolveOptions opts;
      opts.family = family;
      fvs::SolveStats stats;
      CHECK_FALSE(fvs::solve_disjoint(inst, opts, stats).yes);
    }
  }
}

TEST_CASE("simple branching on a vertex of U-degree three") {
  // D-vertex 0 with U-neighbours 1, 2, 3 and D-neighbour 4; 4 carries three
  // more U-neighbours.
  const Edges edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {4, 7}};
  const std::vector<int> d{0, 4};
  const auto inst = fvs::make_instance(8, edges, d, 2);
  const auto before = fvs::measures(inst);
  const auto children = fvs::branch_simple(inst);
  REQUIRE(children.size() == 2);
  CHECK(children[0].forced == std::vector{vertex_id(0)});
  CHECK(before.mu - fvs::measures(children[0].inst).mu >= 1);
  CHECK(before.ell - fvs::measures(children[1].inst).ell >= 2);
}

TEST_CASE("concrete rule application meets the analysed drops") {
  for (const auto& t : fvs::analysis::admissible_types(5, 3, 2)) {
    const auto id = fvs::rules::dispatch(t);
    if (!id) continue;
    const auto inst = witness(t);
    const auto branch = fvs::branch_fast(inst);
    REQUIRE_MESSAGE(branch.has_value(), fvs::to_string(t));
    CHECK(branch->rule == *id);
    CHECK(branch->guide.type == t);
    const auto predicted = fvs::analysis::expand_rule(*id, t, inst.alpha);
    REQUIRE(branch->children.size() == predicted.drops.size());
    const double before = fvs::measures(inst).mu_alpha;
    for (std::size_t i = 0; i < predicted.drops.size(); ++i) {
      const auto& child = branch->children[i];
      CHECK(child.path == predicted.paths[i]);
      CHECK(child.predicted_drop == doctest::Approx(predicted.drops[i]));
      INFO(fvs::to_string(t), " ", child.path);
      CHECK(before - fvs::measures(child.inst).mu_alpha >= child.predicted_drop - 1e-9);
    }
  }
}

TEST_CASE("statistics are collected") {
  const auto out = fvs::solve_fvs_minimum(petersen(), options_for(fvs::Family::kFast));
  CHECK(out.stats.nodes > 0);
  CHECK(out.stats.leaves > 0);
  CHECK(out.stats.disjoint_calls > 0);
  CHECK(out.stats.measure_checks > 0);
  CHECK(out.stats.measure_violations == 0);
  CHECK_FALSE(out.stats.rule_histogram.empty());
}

TEST_CASE("budgets of 30 or more are refused") {
  CHECK_THROWS_AS(fvs::solve_fvs(complete(4), 30, options_for(fvs::Family::kFast)), fvs::Error);
}

TEST_CASE("small exactness run against the oracle") {
  fvs::harness::ExactnessConfig config;
  config.enumerate_up_to = 6;
  config.random_samples = 60;
  config.random_max_n = 10;
  const auto r = fvs::harness::exactness_suite(config);
  INFO(r.exactness.detail);
  CHECK(r.exactness.passed);
  CHECK(r.measures.passed);
}

TEST_CASE("disjoint solver agrees with the oracle") {
  const auto r = fvs::harness::disjoint_suite(150, 10, 4);
  INFO(r.detail);
  CHECK(r.passed);
}
