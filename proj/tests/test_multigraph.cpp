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

#include <vector>

#include "fvs/disjoint_sets.hpp"
#include "fvs/error.hpp"
#include "fvs/multigraph.hpp"

using fvs::Multigraph;
using fvs::VertexId;

namespace {

std::vector<VertexId> add(Multigraph& g, int n) {
  std::vector<VertexId> v;
  for (int i = 0; i < n; ++i) v.push_back(g.add_vertex());
  return v;
}

}  // namespace

TEST_CASE("contracting a triangle edge leaves a double edge and no loop") {
  Multigraph g;
  auto v = add(g, 3);
  g.add_edge(v[0], v[1]);
  g.add_edge(v[1], v[2]);
  g.add_edge(v[0], v[2]);
  const VertexId x = g.contract_edge(v[0], v[1]);
  CHECK(g.vertex_count() == 2);
  CHECK(g.multiplicity(x, v[2]) == 2);
  CHECK(g.loops(x) == 0);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(x) == 2);
  REQUIRE(g.merged_from(x).has_value());
  CHECK(g.merged_from(x)->first == v[0]);
  g.audit();
}

TEST_CASE("contracting a path edge keeps the graph simple") {
  Multigraph g;
  auto v = add(g, 3);
  g.add_edge(v[0], v[1]);
  g.add_edge(v[1], v[2]);
  const VertexId x = g.contract_edge(v[0], v[1]);
  CHECK(g.multiplicity(x, v[2]) == 1);
  CHECK(g.loops(x) == 0);
  CHECK(fvs::is_forest(g));
}

TEST_CASE("contracting one copy of a double edge produces a loop") {
  Multigraph g;
  auto v = add(g, 2);
  g.add_edge(v[0], v[1], 2);
  const VertexId x = g.contract_edge(v[0], v[1]);
  CHECK(g.vertex_count() == 1);
  CHECK(g.loops(x) == 1);
  CHECK(g.degree(x) == 2);
  CHECK_FALSE(fvs::is_forest(g));
  g.audit();
}

TEST_CASE("contraction errors") {
  Multigraph g;
  auto v = add(g, 2);
  CHECK_THROWS_AS(g.contract_edge(v[0], v[1]), fvs::Error);
  CHECK_THROWS_AS(g.contract_edge(v[0], v[0]), fvs::Error);
}

TEST_CASE("subdivision") {
  Multigraph g;
  auto v = add(g, 2);
  SUBCASE("single edge becomes a path") {
    g.add_edge(v[0], v[1]);
    const VertexId x = g.subdivide_edge(v[0], v[1]);
    CHECK(g.multiplicity(v[0], v[1]) == 0);
    CHECK(g.multiplicity(v[0], x) == 1);
    CHECK(g.multiplicity(x, v[1]) == 1);
    CHECK(fvs::is_forest(g));
  }
  SUBCASE("double edge keeps one copy") {
    g.add_edge(v[0], v[1], 2);
    const VertexId x = g.subdivide_edge(v[0], v[1]);
    CHECK(g.multiplicity(v[0], v[1]) == 1);
    CHECK(g.degree(x) == 2);
    CHECK(g.edge_count() == 3);
    CHECK_FALSE(fvs::is_forest(g));
  }
  SUBCASE("missing edge") { CHECK_THROWS_AS(g.subdivide_edge(v[0], v[1]), fvs::Error); }
}

TEST_CASE("forest checks") {
  Multigraph empty;
  CHECK(fvs::is_forest(empty));

  Multigraph k3;
  auto v = add(k3, 3);
  k3.add_edge(v[0], v[1]);
  k3.add_edge(v[1], v[2]);
  k3.add_edge(v[2], v[0]);
  CHECK_FALSE(fvs::is_forest(k3));
  const std::vector<VertexId> two{v[0], v[1]};
  CHECK(fvs::is_forest(k3, two));

  Multigraph path;
  auto p = add(path, 3);
  path.add_edge(p[0], p[1]);
  path.add_edge(p[1], p[2]);
  CHECK(fvs::is_forest(path));
}

TEST_CASE("component counts") {
  Multigraph g;
  auto v = add(g, 4);
  CHECK(fvs::component_count(g, std::vector<VertexId>{}) == 0);
  g.add_edge(v[0], v[1]);
  g.add_edge(v[2], v[3]);
  CHECK(fvs::component_count(g, g.vertices()) == 2);
  g.add_edge(v[1], v[2]);
  CHECK(fvs::component_count(g, std::vector<VertexId>{v[0], v[3]}) == 2);
}

TEST_CASE("vertex removal updates counts and ids are not reused") {
  Multigraph g;
  auto v = add(g, 3);
  g.add_edge(v[0], v[1], 3);
  g.add_edge(v[1], v[1]);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(v[1]) == 5);
  g.remove_vertex(v[1]);
  CHECK(g.edge_count() == 0);
  CHECK_FALSE(g.has_vertex(v[1]));
  CHECK(g.add_vertex() != v[1]);
  g.audit();
}

TEST_CASE("disjoint sets") {
  fvs::DisjointSets s(5);
  CHECK(s.set_count() == 5);
  CHECK(s.unite(0, 1));
  CHECK(s.unite(1, 2));
  CHECK_FALSE(s.unite(0, 2));
  CHECK(s.same(0, 2));
  CHECK_FALSE(s.same(0, 3));
  CHECK(s.set_count() == 3);
}

TEST_CASE("rollback disjoint sets undo unions in reverse order") {
  fvs::RollbackDisjointSets s(4);
  s.unite(0, 1);
  const auto mark = s.checkpoint();
  s.unite(2, 3);
  s.unite(1, 2);
  CHECK(s.find(0) == s.find(3));
  s.rollback(mark);
  CHECK(s.find(0) == s.find(1));
  CHECK(s.find(2) != s.find(3));
  CHECK(s.find(1) != s.find(2));
}
