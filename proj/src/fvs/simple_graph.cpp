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

#include "fvs/simple_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fvs/disjoint_sets.hpp"
#include "fvs/error.hpp"

namespace fvs {

bool is_forest_without(const SimpleGraph& g, std::span<const int> removed) {
  std::vector<bool> gone(static_cast<std::size_t>(g.n), false);
  for (int v : removed) gone.at(static_cast<std::size_t>(v)) = true;
  DisjointSets sets(static_cast<std::size_t>(g.n));
  for (const auto& [a, b] : g.edges) {
    if (gone[static_cast<std::size_t>(a)] || gone[static_cast<std::size_t>(b)]) continue;
    if (!sets.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) return false;
  }
  return true;
}

void validate(const SimpleGraph& g) {
  if (g.n < 0) fail(ErrorCode::kInvalidArgument, "negative vertex count");
  if (!g.labels.empty() && g.labels.size() != static_cast<std::size_t>(g.n)) {
    fail(ErrorCode::kInvalidArgument, "label count differs from vertex count");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.n || b >= g.n) {
      fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (a == b) fail(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(g.label(a)));
    if (!seen.insert(std::minmax(a, b)).second) {
      fail(ErrorCode::kInvalidArgument, "duplicate edge " + std::to_string(g.label(a)) + " " +
                                            std::to_string(g.label(b)));
    }
  }
}

}  // namespace fvs
