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

#include <cstddef>
#include <optional>
#include <vector>

#include "fvs/instance.hpp"
#include "fvs/poly_case.hpp"
#include "fvs/simple_graph.hpp"

// Exhaustive reference solvers. They share no code with the solver beyond the
// data types: acyclicity is checked here with a separate depth-first search.
namespace fvs::oracle {

struct Budget {
  int max_vertices = 14;
  std::size_t max_pairs = 16;
};

// Smallest X with g \ X a forest; among equal sizes the lexicographically
// first. Throws kCapacityExceeded above the cap.
std::vector<int> brute_fvs(const SimpleGraph& g, const Budget& budget = {});

struct DisjointAnswer {
  bool yes = false;
  std::vector<VertexId> solution;  // a minimum solution (instance ids), even when NO
  std::optional<int> minimum;      // size of that solution; empty if none exists
};

// Minimum X subset of D with G \ X a forest; YES iff it has size at most k.
DisjointAnswer brute_disjoint_fvs(const Instance& inst, const Budget& budget = {});

// Maximum set of pair indices with an acyclic union in H.
std::vector<std::size_t> brute_parity(const ParityInput& p, const Budget& budget = {});

// Depth-first acyclicity over an explicit edge list on vertices 0..n-1;
// parallel edges and loops count as cycles.
bool acyclic(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace fvs::oracle
