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

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "fvs/instance.hpp"
#include "fvs/multigraph.hpp"

namespace fvs {

// An instance in which every D-vertex is a tent whose three neighbours lie in
// three distinct trees of the forest G[U]. For each tent v the incident edges
// are enumerated e_v^0, e_v^1, e_v^2 by ascending neighbour id; only the
// neighbour is stored since the graph is simple around tents.
struct TentInstance {
  Instance inst;
  std::map<VertexId, std::array<VertexId, 3>> edge_ends;
};

// Validates the tent invariants, naming the offending vertex on failure.
TentInstance make_tent_instance(const Instance& inst);

struct ParityEdge {
  VertexId a{};
  VertexId b{};
};

struct ParityPair {
  VertexId tent{};
  ParityEdge first;   // image of e_v^1
  ParityEdge second;  // image of e_v^2
};

// H is G with E(G[U]) and every e_v^0 contracted; its edges are exactly the
// images of the e_v^1, e_v^2 and are partitioned into one pair per tent.
struct ParityInput {
  Multigraph h;
  std::vector<ParityPair> pairs;
};

ParityInput build_parity_input(const TentInstance& t);

// Maximum set of pair indices whose edge union is acyclic in H. Exact
// branch-and-bound: a pair whose two edges already close a cycle is never
// selected, and the search is pruned with the graphic-matroid rank of the
// edges still available.
std::vector<std::size_t> graphic_matroid_parity(const ParityInput& p);

// True iff the union of the selected pairs is acyclic in H.
bool pairs_acyclic(const ParityInput& p, const std::vector<std::size_t>& selected);

struct TentSolution {
  bool yes = false;
  std::vector<VertexId> deletion;  // instance ids, a minimum solution
};

// Minimum X subset of D with G \ X a forest via matroid parity; YES iff
// |X| <= k. The returned deletion set is re-verified with a forest check.
TentSolution solve_tent_instance(const TentInstance& t);

}  // namespace fvs
