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

#include <string>

#include "fvs/error.hpp"
#include "fvs/graph_io.hpp"

using fvs::GraphFormat;

namespace {

fvs::ErrorCode code_of(std::string_view text, GraphFormat format) {
  try {
    fvs::parse_graph(text, format);
  } catch (const fvs::Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return fvs::ErrorCode::kInternalState;
}

std::string message_of(std::string_view text, GraphFormat format) {
  try {
    fvs::parse_graph(text, format);
  } catch (const fvs::Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("edgelist path") {
  const auto p = fvs::parse_graph("1 2\n2 3\n", GraphFormat::kEdgelist);
  CHECK(p.graph.n == 3);
  CHECK(p.graph.edges.size() == 2);
  CHECK(p.graph.label(0) == 1);
  CHECK(p.graph.label(2) == 3);
  CHECK(p.warnings.empty());
}

TEST_CASE("edgelist comments, blank lines and duplicates") {
  const auto p = fvs::parse_graph("# header\n\n10 20  # trailing\n20 10\n", GraphFormat::kEdgelist);
  CHECK(p.graph.n == 2);
  CHECK(p.graph.edges.size() == 1);
  CHECK(p.warnings.size() == 1);
}

TEST_CASE("dimacs triangle") {
  const auto p = fvs::parse_graph("c a comment\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::kDimacs);
  CHECK(p.graph.n == 3);
  CHECK(p.graph.edges.size() == 3);
  CHECK(p.graph.label(0) == 1);
}

TEST_CASE("dimacs keeps isolated vertices") {
  const auto p = fvs::parse_graph("p edge 5 1\ne 1 2\n", GraphFormat::kDimacs);
  CHECK(p.graph.n == 5);
}

TEST_CASE("input errors") {
  CHECK(code_of("1 1\n", GraphFormat::kEdgelist) == fvs::ErrorCode::kSelfLoop);
  CHECK(code_of("1 2\n3\n", GraphFormat::kEdgelist) == fvs::ErrorCode::kParse);
  CHECK(code_of("1 -2\n", GraphFormat::kEdgelist) == fvs::ErrorCode::kParse);
  CHECK(code_of("1 2 3\n", GraphFormat::kEdgelist) == fvs::ErrorCode::kParse);
  CHECK(code_of("p edge 3 2\ne 1 2\n", GraphFormat::kDimacs) == fvs::ErrorCode::kEdgeCountMismatch);
  CHECK(code_of("p edge 2 1\ne 1 3\n", GraphFormat::kDimacs) == fvs::ErrorCode::kParse);
  CHECK(code_of("e 1 2\n", GraphFormat::kDimacs) == fvs::ErrorCode::kParse);
  CHECK(code_of("p edge 2 1\ne 2 2\n", GraphFormat::kDimacs) == fvs::ErrorCode::kSelfLoop);
}

TEST_CASE("errors carry the line number") {
  CHECK(message_of("1 2\n\n2 x\n", GraphFormat::kEdgelist).find("line 3") != std::string::npos);
}

TEST_CASE("edgelist round trip") {
  const auto p = fvs::parse_graph("5 7\n7 9\n9 5\n", GraphFormat::kEdgelist);
  const auto again = fvs::parse_graph(fvs::write_edgelist(p.graph), GraphFormat::kEdgelist);
  CHECK(again.graph.n == p.graph.n);
  CHECK(again.graph.edges == p.graph.edges);
  CHECK(again.graph.labels == p.graph.labels);
}

TEST_CASE("format names") {
  CHECK(fvs::parse_format("edgelist") == GraphFormat::kEdgelist);
  CHECK(fvs::parse_format("dimacs") == GraphFormat::kDimacs);
  CHECK_THROWS_AS(fvs::parse_format("gml"), fvs::Error);
}
