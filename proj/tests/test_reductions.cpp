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

#include <utility>
#include <vector>

#include "fvs/harness.hpp"
#include "fvs/instance.hpp"
#include "fvs/oracle.hpp"
#include "fvs/reductions.hpp"

using fvs::OutcomeKind;
using fvs::ReductionRule;
using fvs::vertex_id;

namespace {

using Edges = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("an isolated D-vertex is removed without changing the measure") {
  const Edges edges{{1, 2}};
  const std::vector<int> d{0};
  auto inst = fvs::make_instance(3, edges, d, 1);
  const auto before = fvs::measures(inst);
  const auto out = fvs::reduce_simple(inst);
  CHECK(out.rule == ReductionRule::kLowDegree);
  CHECK(out.kind == OutcomeKind::kChanged);
  CHECK_FALSE(inst.graph.has_vertex(vertex_id(0)));
  CHECK(fvs::measures(inst).mu == before.mu);
}

TEST_CASE("a D-vertex with two neighbours in one U-tree is deleted") {
  // U-path 1 - 2 with D-vertex 0 adjacent to both ends.
  const Edges edges{{0, 1}, {0, 2}, {1, 2}};
  const std::vector<int> d{0};
  auto inst = fvs::make_instance(3, edges, d, 1);
  const auto out = fvs::reduce_simple(inst);
  CHECK(out.rule == ReductionRule::kTwoNeighbours);
  CHECK(inst.k == 0);
  CHECK(out.forced == std::vector{vertex_id(0)});
  CHECK_FALSE(inst.graph.has_vertex(vertex_id(0)));
}

TEST_CASE("a D-leaf of U-degree two is subdivided into a tent") {
  // D: v=0 - w=1; U: 2..6; extra tents 7 and 8 keep every U-degree >= 2.
  const Edges edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6},
                    {7, 2}, {7, 4}, {7, 6}, {8, 3}, {8, 5}, {8, 2}};
  const std::vector<int> d{0, 1, 7, 8};
  auto inst = fvs::make_instance(9, edges, d, 3);
  const auto before = fvs::measures(inst);
  const auto out = fvs::reduce_simple(inst);
  REQUIRE(out.rule == ReductionRule::kSubdivide);
  CHECK(inst.is_tent(vertex_id(0)));
  const auto after = fvs::measures(inst);
  CHECK(after.tents == before.tents + 1);
  CHECK(after.ell == before.ell + 1);
  CHECK(after.mu == doctest::Approx(before.mu));
  REQUIRE(out.trace.vertices.size() == 3);
  CHECK(inst.in_u(out.trace.vertices[2]));
}

TEST_CASE("the simple measure bound answers NO") {
  // Two tents over four isolated U-vertices with k = 0: mu = 0 + 4 - 2.
  const Edges edges{{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}};
  const std::vector<int> d{0, 1};
  auto inst = fvs::make_instance(6, edges, d, 0);
  // U-vertices 2 and 5 have degree one and go first.
  const auto out = fvs::reduce_to_fixpoint(inst, fvs::Family::kSimple);
  CHECK(out.kind != OutcomeKind::kChanged);
  const auto oracle = fvs::oracle::brute_disjoint_fvs(fvs::make_instance(6, edges, d, 0));
  CHECK(oracle.yes == (out.kind == OutcomeKind::kPolySolved && out.poly_yes));
}

TEST_CASE("the fast measure bound answers NO") {
  // One U-vertex and a tent with three parallel edges into it, k = 0:
  // mu_alpha = 0 + 0.84 - 1 <= (0.84 - 0.5) * 1.
  const Edges edges{{0, 1}, {0, 1}, {0, 1}};
  const std::vector<int> d{0};
  auto inst = fvs::make_instance(2, edges, d, 0, 0.84);
  const auto out = fvs::reduce_fast(inst);
  CHECK(out.rule == ReductionRule::kMeasureBoundFast);
  CHECK(out.kind == OutcomeKind::kNoInstance);
}

TEST_CASE("a negative budget is NO in both families") {
  const Edges edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 3}};
  const std::vector<int> d{0, 1, 2, 3};
  for (const auto family : {fvs::Family::kSimple, fvs::Family::kFast}) {
    auto inst = fvs::make_instance(4, edges, d, -1, family == fvs::Family::kSimple ? 1.0 : 0.84);
    const auto out = fvs::reduce_to_fixpoint(inst, family);
    CHECK(out.kind == OutcomeKind::kNoInstance);
  }
}

TEST_CASE("a degree-two D-vertex between D-vertices is contracted") {
  // D-path 0 - 1 - 2; ends carry two U-neighbours each.
  const Edges edges{{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}};
  const std::vector<int> d{0, 1, 2};
  auto inst = fvs::make_instance(7, edges, d, 1, 0.84);
  const auto out = fvs::reduce_fast(inst);
  REQUIRE(out.rule == ReductionRule::kDegreeTwoFast);
  CHECK(inst.graph.vertex_count() == 6);
  REQUIRE(out.trace.vertices.size() == 2);
  const auto merged = out.trace.vertices[1];
  CHECK(inst.origin(merged) == vertex_id(0));
  CHECK(inst.graph.multiplicity(merged, vertex_id(2)) == 1);
  CHECK(fvs::d_is_forest(inst));
}

TEST_CASE("a degree-two D-vertex closing a U-cycle is deleted, not moved") {
  const Edges edges{{0, 1}, {0, 2}, {1, 2}};
  const std::vector<int> d{0};
  auto inst = fvs::make_instance(3, edges, d, 1, 0.84);
  const auto out = fvs::reduce_fast(inst);
  CHECK(out.rule == ReductionRule::kDegreeTwoFast);
  CHECK(out.forced == std::vector{vertex_id(0)});
  CHECK(inst.k == 0);
  CHECK(fvs::u_is_forest(inst));
}

TEST_CASE("a degree-two D-vertex with a U-neighbour moves to U") {
  const Edges edges{{0, 1}, {0, 2}};
  const std::vector<int> d{0};
  auto inst = fvs::make_instance(3, edges, d, 0, 0.84);
  const auto out = fvs::reduce_fast(inst);
  CHECK(out.rule == ReductionRule::kDegreeTwoFast);
  CHECK(inst.in_u(vertex_id(0)));
}

TEST_CASE("all tents over a cyclic G[U] is NO") {
  const Edges edges{{1, 2}, {2, 3}, {3, 1}, {0, 4}, {0, 5}, {0, 6}};
  const std::vector<int> d{0};
  auto inst = fvs::make_instance(7, edges, d, 5, 0.84);
  const auto out = fvs::reduce_fast(inst);
  CHECK(out.rule == ReductionRule::kTentPolyFast);
  CHECK(out.kind == OutcomeKind::kNoInstance);
}

TEST_CASE("the early cycle exit answers NO on a cyclic G[U]") {
  const Edges edges{{1, 2}, {2, 3}, {3, 1}, {0, 1}, {0, 4}, {0, 5}};
  const std::vector<int> d{0};
  auto inst = fvs::make_instance(6, edges, d, 5, 0.84);
  fvs::ReduceOptions options;
  options.early_cycle_exit = true;
  const auto out = fvs::reduce_fast(inst, options);
  CHECK(out.rule == ReductionRule::kEarlyCycleExit);
  CHECK(out.kind == OutcomeKind::kNoInstance);
}

TEST_CASE("a lone isolated D-vertex reduces to an empty YES instance") {
  const std::vector<int> d{0};
  auto inst = fvs::make_instance(1, Edges{}, d, 0, 0.84);
  const auto out = fvs::reduce_to_fixpoint(inst, fvs::Family::kFast);
  CHECK(out.kind == OutcomeKind::kPolySolved);
  CHECK(out.poly_yes);
  CHECK(out.certificate.empty());
  CHECK(inst.graph.vertex_count() == 0);
}

TEST_CASE("a D-path of degree-two vertices collapses consistently with the oracle") {
  // D-path 0..4, ends joined to U-vertices 5 and 6, which are also adjacent.
  const Edges edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {4, 6}, {5, 6}};
  const std::vector<int> d{0, 1, 2, 3, 4};
  for (int k = 0; k <= 1; ++k) {
    auto inst = fvs::make_instance(7, edges, d, k, 0.84);
    const bool expected = fvs::oracle::brute_disjoint_fvs(inst).yes;
    const auto out = fvs::reduce_to_fixpoint(inst, fvs::Family::kFast);
    const bool got = out.kind == OutcomeKind::kPolySolved && out.poly_yes;
    CHECK(out.kind != OutcomeKind::kIrreducible);
    CHECK(got == expected);
  }
}

TEST_CASE("randomized reduction safeness") {
  const auto result = fvs::harness::reduction_safeness_suite(300, 9, 7);
  INFO(result.detail);
  CHECK(result.passed);
  CHECK(result.failures == 0);
}
