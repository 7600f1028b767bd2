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

#include "fvs/multigraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "fvs/disjoint_sets.hpp"
#include "fvs/error.hpp"

namespace fvs {

namespace {

std::string name(VertexId v) { return std::to_string(index_of(v)); }

}  // namespace

Multigraph::Node& Multigraph::node(VertexId v) {
  auto it = nodes_.find(v);
  if (it == nodes_.end()) fail(ErrorCode::kInvalidArgument, "unknown vertex " + name(v));
  return it->second;
}

const Multigraph::Node& Multigraph::node(VertexId v) const {
  auto it = nodes_.find(v);
  if (it == nodes_.end()) fail(ErrorCode::kInvalidArgument, "unknown vertex " + name(v));
  return it->second;
}

VertexId Multigraph::add_vertex() {
  const VertexId v = vertex_id(next_id_++);
  nodes_.emplace(v, Node{});
  return v;
}

void Multigraph::add_edge(VertexId u, VertexId v, std::uint32_t count) {
  if (count == 0) return;
  if (u == v) {
    node(u).loops += count;
  } else {
    Node& a = node(u);
    Node& b = node(v);
    a.adj[v] += count;
    b.adj[u] += count;
  }
  edge_count_ += count;
}

void Multigraph::remove_vertex(VertexId v) {
  Node& n = node(v);
  std::size_t removed = n.loops;
  for (const auto& [w, m] : n.adj) {
    nodes_.at(w).adj.erase(v);
    removed += m;
  }
  edge_count_ -= removed;
  nodes_.erase(v);
}

VertexId Multigraph::contract_edge(VertexId u, VertexId v) {
  if (u == v) fail(ErrorCode::kContractViolation, "cannot contract a loop at " + name(u));
  const std::uint32_t p = has_vertex(u) && has_vertex(v) ? multiplicity(u, v) : 0;
  if (p == 0) {
    fail(ErrorCode::kContractViolation,
         "no edge " + name(u) + "-" + name(v) + " to contract");
  }
  const Node nu = node(u);
  const Node nv = node(v);
  const std::size_t before = edge_count_;
  remove_vertex(u);
  remove_vertex(v);
  edge_count_ = before;

  const VertexId x = add_vertex();
  Node& nx = nodes_.at(x);
  nx.loops = nu.loops + nv.loops + (p - 1);
  for (const Node* src : {&nu, &nv}) {
    for (const auto& [w, m] : src->adj) {
      if (w == u || w == v) continue;
      nx.adj[w] += m;
      nodes_.at(w).adj[x] += m;
    }
  }
  // One copy of uv disappears; everything else is preserved.
  edge_count_ -= 1;
  merges_.emplace(x, std::make_pair(u, v));
  return x;
}

VertexId Multigraph::subdivide_edge(VertexId u, VertexId v) {
  if (u == v || multiplicity(u, v) == 0) {
    fail(ErrorCode::kContractViolation,
         "no edge " + name(u) + "-" + name(v) + " to subdivide");
  }
  Node& a = node(u);
  Node& b = node(v);
  if (--a.adj[v] == 0) a.adj.erase(v);
  if (--b.adj[u] == 0) b.adj.erase(u);
  --edge_count_;
  const VertexId x = add_vertex();
  add_edge(u, x);
  add_edge(x, v);
  return x;
}

std::uint32_t Multigraph::multiplicity(VertexId u, VertexId v) const {
  if (u == v) return loops(u);
  const Node& a = node(u);
  auto it = a.adj.find(v);
  return it == a.adj.end() ? 0 : it->second;
}

std::uint32_t Multigraph::loops(VertexId v) const { return node(v).loops; }

std::uint32_t Multigraph::degree(VertexId v) const {
  const Node& n = node(v);
  std::uint32_t d = 2 * n.loops;
  for (const auto& [w, m] : n.adj) d += m;
  return d;
}

const Multigraph::Adjacency& Multigraph::neighbors(VertexId v) const {
  return node(v).adj;
}

std::vector<VertexId> Multigraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(nodes_.size());
  for (const auto& [v, n] : nodes_) out.push_back(v);
  return out;
}

std::optional<std::pair<VertexId, VertexId>> Multigraph::merged_from(VertexId x) const {
  auto it = merges_.find(x);
  if (it == merges_.end()) return std::nullopt;
  return it->second;
}

void Multigraph::audit() const {
  std::size_t twice = 0;
  for (const auto& [v, n] : nodes_) {
    twice += 2 * n.loops;
    for (const auto& [w, m] : n.adj) {
      if (w == v) fail(ErrorCode::kInternalState, "self entry in adjacency of " + name(v));
      if (m == 0) fail(ErrorCode::kInternalState, "zero multiplicity entry at " + name(v));
      auto it = nodes_.find(w);
      if (it == nodes_.end()) {
        fail(ErrorCode::kInternalState, "dangling neighbour " + name(w) + " of " + name(v));
      }
      auto back = it->second.adj.find(v);
      if (back == it->second.adj.end() || back->second != m) {
        fail(ErrorCode::kInternalState,
             "asymmetric adjacency between " + name(v) + " and " + name(w));
      }
      twice += m;
    }
  }
  if (twice != 2 * edge_count_) {
    fail(ErrorCode::kInternalState, "edge count cache out of sync");
  }
}

bool is_forest_if(const Multigraph& g, const std::function<bool(VertexId)>& keep) {
  DisjointSets sets(g.id_bound());
  bool acyclic = true;
  g.for_each_vertex([&](VertexId v) {
    if (!acyclic || !keep(v)) return;
    if (g.loops(v) > 0) {
      acyclic = false;
      return;
    }
    for (const auto& [w, m] : g.neighbors(v)) {
      if (w < v || !keep(w)) continue;
      if (m > 1 || !sets.unite(index_of(v), index_of(w))) {
        acyclic = false;
        return;
      }
    }
  });
  return acyclic;
}

bool is_forest(const Multigraph& g) {
  return is_forest_if(g, [](VertexId) { return true; });
}

bool is_forest(const Multigraph& g, std::span<const VertexId> subset) {
  std::unordered_set<VertexId> keep(subset.begin(), subset.end());
  return is_forest_if(g, [&](VertexId v) { return keep.contains(v); });
}

std::size_t component_count_if(const Multigraph& g,
                               const std::function<bool(VertexId)>& keep) {
  DisjointSets sets(g.id_bound());
  std::size_t kept = 0;
  std::size_t merges = 0;
  g.for_each_vertex([&](VertexId v) {
    if (!keep(v)) return;
    ++kept;
    for (const auto& [w, m] : g.neighbors(v)) {
      if (w < v && keep(w) && sets.unite(index_of(v), index_of(w))) ++merges;
    }
  });
  return kept - merges;
}

std::size_t component_count(const Multigraph& g, std::span<const VertexId> subset) {
  std::unordered_set<VertexId> keep(subset.begin(), subset.end());
  return component_count_if(g, [&](VertexId v) { return keep.contains(v); });
}

}  // namespace fvs
