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
#include <random>
#include <utility>
#include <vector>

#include "fvs/error.hpp"
#include "fvs/harness.hpp"
#include "fvs/instance.hpp"
#include "fvs/oracle.hpp"
#include "fvs/simple_graph.hpp"

namespace {

using Edges = std::vector<std::pair<int, int>>;

fvs::SimpleGraph complete(int n) {
  fvs::SimpleGraph g{n, {}, {}};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.edges.push_back({a, b});
  }
  return g;
}

}  // namespace

TEST_CASE("brute force minimum feedback vertex sets") {
  CHECK(fvs::oracle::brute_fvs(complete(3)).size() == 1);
  CHECK(fvs::oracle::brute_fvs(complete(3)) == std::vector{0});
  CHECK(fvs::oracle::brute_fvs(complete(4)).size() == 2);
  const fvs::SimpleGraph star{4, {{0, 1}, {0, 2}, {0, 3}}, {}};
  CHECK(fvs::oracle::brute_fvs(star).empty());
}

TEST_CASE("the oracle refuses oversized inputs") {
  CHECK_THROWS_AS(fvs::oracle::brute_fvs(complete(15)), fvs::Error);
  fvs::oracle::Budget small;
  small.max_vertices = 3;
  CHECK_THROWS_AS(fvs::oracle::brute_fvs(complete(4), small), fvs::Error);
}

TEST_CASE("brute disjoint FVS with empty D") {
  const std::vector<int> none;
  const auto forest = fvs::oracle::brute_disjoint_fvs(fvs::make_instance(3, Edges{{0, 1}, {1, 2}}, none, 0));
  CHECK(forest.yes);
  CHECK(forest.solution.empty());
  const auto cyclic =
      fvs::oracle::brute_disjoint_fvs(fvs::make_instance(3, Edges{{0, 1}, {1, 2}, {2, 0}}, none, 3));
  CHECK_FALSE(cyclic.yes);
  CHECK_FALSE(cyclic.minimum.has_value());
}

TEST_CASE("brute disjoint FVS with U empty matches brute FVS") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = fvs::harness::gnp(7, 0.45, rng);
    std::vector<int> all(7);
    for (int i = 0; i < 7; ++i) all[static_cast<std::size_t>(i)] = i;
    const auto answer = fvs::oracle::brute_disjoint_fvs(fvs::make_instance(7, g.edges, all, 7));
    CHECK(answer.yes);
    REQUIRE(answer.minimum.has_value());
    CHECK(*answer.minimum == static_cast<int>(fvs::oracle::brute_fvs(g).size()));
  }
}

TEST_CASE("minimum size never decreases when an edge is added") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = fvs::harness::gnp(8, 0.3, rng);
    const auto before = fvs::oracle::brute_fvs(g).size();
    for (int a = 0; a < g.n; ++a) {
      for (int b = a + 1; b < g.n; ++b) {
        if (std::find(g.edges.begin(), g.edges.end(), std::pair{a, b}) == g.edges.end()) {
          g.edges.push_back({a, b});
          CHECK(fvs::oracle::brute_fvs(g).size() >= before);
          g.edges.pop_back();
          a = g.n;
          break;
        }
      }
    }
  }
}

TEST_CASE("independent acyclicity check") {
  CHECK(fvs::oracle::acyclic(0, {}));
  CHECK(fvs::oracle::acyclic(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(fvs::oracle::acyclic(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK_FALSE(fvs::oracle::acyclic(2, {{0, 1}, {0, 1}}));
  CHECK_FALSE(fvs::oracle::acyclic(1, {{0, 0}}));
}

TEST_CASE("brute parity on one acyclic pair") {
  fvs::ParityInput p;
  const auto a = p.h.add_vertex();
  const auto b = p.h.add_vertex();
  const auto c = p.h.add_vertex();
  p.h.add_edge(a, b);
  p.h.add_edge(b, c);
  p.pairs.push_back({fvs::vertex_id(0), {a, b}, {b, c}});
  CHECK(fvs::oracle::brute_parity(p).size() == 1);
}
