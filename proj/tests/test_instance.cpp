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

#include "fvs/error.hpp"
#include "fvs/instance.hpp"

using fvs::VertexClass;
using fvs::vertex_id;

namespace {

using Edges = std::vector<std::pair<int, int>>;

// Appends three fresh U-vertices adjacent to v.
void attach_three(int v, int& next, Edges& edges) {
  for (int i = 0; i < 3; ++i) edges.push_back({v, next++});
}

}  // namespace

TEST_CASE("measures of isolated U-vertices") {
  const std::vector<int> d;
  const auto inst = fvs::make_instance(3, Edges{}, d, 2);
  const auto m = fvs::measures(inst);
  CHECK(m.ell == 3);
  CHECK(m.ell_prime == 3);
  CHECK(m.tents == 0);
  CHECK(m.mu == doctest::Approx(5));
}

TEST_CASE("measures with one tent") {
  const Edges edges{{0, 1}, {0, 2}, {0, 3}};
  const std::vector<int> d{0};
  auto inst = fvs::make_instance(4, edges, d, 1, 0.84);
  CHECK(inst.is_tent(vertex_id(0)));
  const auto m = fvs::measures(inst);
  CHECK(m.ell == 3);
  CHECK(m.tents == 1);
  CHECK(m.mu == doctest::Approx(3));
  CHECK(m.mu_alpha == doctest::Approx(2.52));
}

TEST_CASE("ell prime counts cycles in G[U]") {
  const Edges edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}};
  const std::vector<int> d;
  const auto inst = fvs::make_instance(5, edges, d, 0);
  const auto m = fvs::measures(inst);
  CHECK(m.ell == 2);
  CHECK(m.ell_prime == 1);
  CHECK_FALSE(fvs::u_is_forest(inst));
  CHECK(fvs::d_is_forest(inst));
}

TEST_CASE("degrees split by side") {
  const Edges edges{{0, 1}, {0, 2}, {0, 3}};
  const std::vector<int> d{0, 1};
  const auto inst = fvs::make_instance(4, edges, d, 0);
  CHECK(inst.u_degree(vertex_id(0)) == 2);
  CHECK(inst.d_degree(vertex_id(0)) == 1);
  CHECK_FALSE(inst.is_tent(vertex_id(0)));
  CHECK(inst.u_vertices().size() == 2);
  CHECK(inst.d_vertices().size() == 2);
}

TEST_CASE("classification of a tent") {
  const Edges edges{{0, 1}, {0, 2}, {0, 3}};
  const std::vector<int> d{0};
  const auto view = fvs::classify(fvs::make_instance(4, edges, d, 1));
  CHECK(view.cls.at(vertex_id(0)) == VertexClass::kTent);
  CHECK(view.roots == std::vector{vertex_id(0)});
}

TEST_CASE("a degree-zero centre with two single children is a double") {
  // 0 is the root (a D-leaf); 1 is the centre; 2 and 3 are singles.
  Edges edges{{0, 1}, {1, 2}, {1, 3}};
  int next = 4;
  attach_three(0, next, edges);
  attach_three(2, next, edges);
  attach_three(3, next, edges);
  const std::vector<int> d{0, 1, 2, 3};
  const auto view = fvs::classify(fvs::make_instance(next, edges, d, 3));
  CHECK(view.cls.at(vertex_id(2)) == VertexClass::kSingle);
  CHECK(view.cls.at(vertex_id(3)) == VertexClass::kSingle);
  CHECK(view.cls.at(vertex_id(1)) == VertexClass::kDouble);
  CHECK(view.cls.at(vertex_id(0)) == VertexClass::kStandard);
  CHECK(view.parent.at(vertex_id(1)) == vertex_id(0));
}

TEST_CASE("guide with three single children") {
  // 0 - 1 in D; 1 has single children 2, 3, 4 and no U-neighbour.
  Edges edges{{0, 1}, {1, 2}, {1, 3}, {1, 4}};
  int next = 5;
  attach_three(0, next, edges);
  for (int s : {2, 3, 4}) attach_three(s, next, edges);
  const std::vector<int> d{0, 1, 2, 3, 4};
  const auto guide = fvs::find_guide(fvs::classify(fvs::make_instance(next, edges, d, 3)));
  CHECK(guide.vertex == vertex_id(1));
  CHECK(guide.type == fvs::GuideType{0, 3, 0});
  CHECK(guide.parent == vertex_id(0));
}

TEST_CASE("guide with one U-neighbour and a double child") {
  // 0 - 1 - 2 in D; 2 is a double over singles 3 and 4.
  Edges edges{{0, 1}, {1, 2}, {2, 3}, {2, 4}};
  int next = 5;
  attach_three(0, next, edges);
  edges.push_back({1, next++});
  attach_three(3, next, edges);
  attach_three(4, next, edges);
  const std::vector<int> d{0, 1, 2, 3, 4};
  const auto guide = fvs::find_guide(fvs::classify(fvs::make_instance(next, edges, d, 3)));
  CHECK(guide.vertex == vertex_id(1));
  CHECK(guide.type == fvs::GuideType{1, 0, 1});
}

TEST_CASE("an all-tent instance has no guide") {
  const Edges edges{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}};
  const std::vector<int> d{0, 1};
  const auto view = fvs::classify(fvs::make_instance(6, edges, d, 1));
  CHECK_THROWS_AS(fvs::find_guide(view), fvs::Error);
}

TEST_CASE("a cycle in G[D] is rejected by classification") {
  const Edges edges{{0, 1}, {1, 2}, {2, 0}};
  const std::vector<int> d{0, 1, 2};
  CHECK_THROWS_AS(fvs::classify(fvs::make_instance(3, edges, d, 1)), fvs::Error);
}

TEST_CASE("forbidden guide types") {
  CHECK(fvs::is_forbidden_guide_type({0, 2, 0}));
  CHECK(fvs::is_forbidden_guide_type({3, 0, 0}));
  CHECK_FALSE(fvs::is_forbidden_guide_type({4, 0, 0}));
  CHECK_FALSE(fvs::is_forbidden_guide_type({0, 3, 0}));
}
