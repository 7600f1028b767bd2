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
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fvs {

// Stable vertex handle. Ids come from a monotone counter and are never reused
// within one graph lifetime.
enum class VertexId : std::uint32_t {};

constexpr std::uint32_t index_of(VertexId v) { return static_cast<std::uint32_t>(v); }
constexpr VertexId vertex_id(std::uint32_t raw) { return static_cast<VertexId>(raw); }

// Undirected multigraph with explicit loop counters. Contraction keeps loops
// and parallel edges.
//
// degree(v) = sum over u != v of multiplicity(u, v) + 2 * loops(v).
class Multigraph {
 public:
  using Adjacency = std::map<VertexId, std::uint32_t>;

  Multigraph() = default;

  VertexId add_vertex();
  // Adds `count` copies of uv; u == v adds loops.
  void add_edge(VertexId u, VertexId v, std::uint32_t count = 1);
  void remove_vertex(VertexId v);

  // Replaces u and v with a fresh vertex x: x receives multiplicity(u,v) - 1
  // loops plus the loops of u and v, and multiplicity(x,w) =
  // multiplicity(u,w) + multiplicity(v,w) for every other neighbour w.
  VertexId contract_edge(VertexId u, VertexId v);

  // Replaces one copy of uv by the path u - x - v and returns x.
  VertexId subdivide_edge(VertexId u, VertexId v);

  bool has_vertex(VertexId v) const { return nodes_.contains(v); }
  std::size_t vertex_count() const { return nodes_.size(); }
  // Total multiplicity, loops counted once each.
  std::size_t edge_count() const { return edge_count_; }

  std::uint32_t multiplicity(VertexId u, VertexId v) const;
  std::uint32_t loops(VertexId v) const;
  std::uint32_t degree(VertexId v) const;
  // Neighbours other than v itself, with multiplicities.
  const Adjacency& neighbors(VertexId v) const;

  std::vector<VertexId> vertices() const;

  template <class F>
  void for_each_vertex(F&& f) const {
    for (const auto& [v, node] : nodes_) f(v);
  }

  // Exclusive upper bound on raw ids handed out so far; sizes dense tables.
  std::uint32_t id_bound() const { return next_id_; }

  // For a vertex created by contraction, the pair it replaced.
  std::optional<std::pair<VertexId, VertexId>> merged_from(VertexId x) const;

  // Walks the adjacency structure and throws if symmetry or the cached edge
  // count is broken.
  void audit() const;

 private:
  struct Node {
    Adjacency adj;
    std::uint32_t loops = 0;
  };

  Node& node(VertexId v);
  const Node& node(VertexId v) const;

  std::map<VertexId, Node> nodes_;
  std::map<VertexId, std::pair<VertexId, VertexId>> merges_;
  std::uint32_t next_id_ = 0;
  std::size_t edge_count_ = 0;
};

// True iff the subgraph induced by vertices passing `keep` has no cycle. Loops
// and parallel edges count as cycles.
bool is_forest_if(const Multigraph& g, const std::function<bool(VertexId)>& keep);
bool is_forest(const Multigraph& g);
bool is_forest(const Multigraph& g, std::span<const VertexId> subset);

std::size_t component_count_if(const Multigraph& g,
                               const std::function<bool(VertexId)>& keep);
std::size_t component_count(const Multigraph& g, std::span<const VertexId> subset);

}  // namespace fvs

template <>
struct std::hash<fvs::VertexId> {
  std::size_t operator()(fvs::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(fvs::index_of(v));
  }
};
