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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fvs {

// A simple undirected graph over vertices 0..n-1 as read from input files.
// `labels` holds the caller's vertex names (same length as n, or empty for
// identity naming).
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::int64_t> labels;

  std::int64_t label(int v) const { return labels.empty() ? v : labels[static_cast<std::size_t>(v)]; }
};

// True iff removing `removed` from g leaves a forest.
bool is_forest_without(const SimpleGraph& g, std::span<const int> removed);

// Throws kInvalidArgument on self-loops, duplicate edges or out-of-range ends.
void validate(const SimpleGraph& g);

}  // namespace fvs
