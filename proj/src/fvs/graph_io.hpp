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

#include <string>
#include <string_view>
#include <vector>

#include "fvs/simple_graph.hpp"

namespace fvs {

enum class GraphFormat { kEdgelist, kDimacs };

GraphFormat parse_format(std::string_view name);

struct ParsedGraph {
  SimpleGraph graph;
  std::vector<std::string> warnings;
};

// Edgelist: one edge "u v" per line over non-negative integer names, '#'
// comments, blank lines ignored; vertices are the names mentioned, in order of
// first appearance. Dimacs: "p edge n m", then "e u v" lines over 1..n, 'c'
// comments. Duplicate edges collapse with a warning; self-loops and syntax
// errors throw with the line number.
ParsedGraph parse_graph(std::string_view text, GraphFormat format);

std::string write_edgelist(const SimpleGraph& g);

}  // namespace fvs
