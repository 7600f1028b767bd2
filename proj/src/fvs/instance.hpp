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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fvs/multigraph.hpp"

namespace fvs {

enum class Side : std::uint8_t { kU, kD };

// Which reduction/branching system drives a solve: the two-rule-family
// split mirrors the (2+phi)^k and 3.592^k algorithms.
enum class Family : std::uint8_t { kSimple, kFast };

const char* to_string(Family family);

inline constexpr double kDefaultFastAlpha = 0.84;

// A Disjoint-FVS instance: delete at most k vertices of D so that the graph
// becomes a forest. Every vertex remembers the vertex of the caller's
// original graph it stands for, so certificates can be mapped back after
// contractions.
struct Instance {
  struct Label {
    Side side = Side::kD;
    VertexId origin{};
  };

  Multigraph graph;
  std::unordered_map<VertexId, Label> labels;
  int k = 0;
  double alpha = 1.0;

  VertexId add_vertex(Side side, std::optional<VertexId> origin = std::nullopt);
  void remove_vertex(VertexId v);

  Side side(VertexId v) const { return labels.at(v).side; }
  bool in_u(VertexId v) const { return side(v) == Side::kU; }
  bool in_d(VertexId v) const { return side(v) == Side::kD; }
  VertexId origin(VertexId v) const { return labels.at(v).origin; }

  std::vector<VertexId> u_vertices() const;
  std::vector<VertexId> d_vertices() const;

  int u_degree(VertexId v) const;
  int d_degree(VertexId v) const;

  bool is_tent(VertexId v) const;
};

// Builds an instance over vertices 0..n-1 (ids equal origins) for tests and
// generators.
Instance make_instance(int n, std::span<const std::pair<int, int>> edges,
                       std::span<const int> deletable, int k, double alpha = 1.0);

struct Measures {
  int k = 0;
  int ell = 0;        // components of G[U]
  int ell_prime = 0;  // |U| - |E(G[U])|
  int tents = 0;
  double mu = 0;        // k + ell - tents
  double mu_alpha = 0;  // k + alpha * ell_prime - tents
};

Measures measures(const Instance& inst);

bool u_is_forest(const Instance& inst);
bool d_is_forest(const Instance& inst);

// Component labels of G[U], indexed by raw vertex id; D vertices get -1.
std::vector<int> u_component_labels(const Instance& inst);

enum class VertexClass : std::uint8_t { kTent, kSingle, kDouble, kStandard };

const char* to_string(VertexClass c);

// Rooted orientation of the forest G[D]. Each component is rooted at its
// lowest-id vertex of D-degree at most one.
struct RootedView {
  std::vector<VertexId> roots;
  std::map<VertexId, std::optional<VertexId>> parent;
  std::map<VertexId, std::vector<VertexId>> children;
  std::map<VertexId, VertexClass> cls;
  std::map<VertexId, int> u_degree;
};

RootedView classify(const Instance& inst);

struct GuideType {
  int f = 0;
  int s = 0;
  int d = 0;

  friend bool operator==(const GuideType&, const GuideType&) = default;
};

std::string to_string(const GuideType& t);

// Types that cannot belong to a guide of an irreducible instance.
bool is_forbidden_guide_type(const GuideType& t);

struct GuideInfo {
  VertexId vertex{};
  GuideType type;
  std::optional<VertexId> parent;
};

// Lowest-id standard vertex none of whose children is standard. Throws
// kNoGuide when there is none, which means a reduction was still applicable.
GuideInfo find_guide(const RootedView& view);

}  // namespace fvs
