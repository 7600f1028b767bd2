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

#include "fvs/instance.hpp"

#include <algorithm>
#include <deque>

#include "fvs/disjoint_sets.hpp"
#include "fvs/error.hpp"

namespace fvs {

const char* to_string(Family family) {
  return family == Family::kSimple ? "simple" : "fast";
}

VertexId Instance::add_vertex(Side s, std::optional<VertexId> origin) {
  const VertexId v = graph.add_vertex();
  labels.emplace(v, Label{s, origin.value_or(v)});
  return v;
}

void Instance::remove_vertex(VertexId v) {
  graph.remove_vertex(v);
  labels.erase(v);
}

std::vector<VertexId> Instance::u_vertices() const {
  std::vector<VertexId> out;
  graph.for_each_vertex([&](VertexId v) {
    if (in_u(v)) out.push_back(v);
  });
  return out;
}

std::vector<VertexId> Instance::d_vertices() const {
  std::vector<VertexId> out;
  graph.for_each_vertex([&](VertexId v) {
    if (in_d(v)) out.push_back(v);
  });
  return out;
}

int Instance::u_degree(VertexId v) const {
  int deg = 0;
  for (const auto& [w, m] : graph.neighbors(v)) {
    if (in_u(w)) deg += static_cast<int>(m);
  }
  return deg;
}

int Instance::d_degree(VertexId v) const {
  int deg = 0;
  for (const auto& [w, m] : graph.neighbors(v)) {
    if (in_d(w)) deg += static_cast<int>(m);
  }
  return deg;
}

bool Instance::is_tent(VertexId v) const {
  return in_d(v) && d_degree(v) == 0 && graph.degree(v) == 3;
}

Instance make_instance(int n, std::span<const std::pair<int, int>> edges,
                       std::span<const int> deletable, int k, double alpha) {
  Instance inst;
  inst.k = k;
  inst.alpha = alpha;
  for (int i = 0; i < n; ++i) inst.add_vertex(Side::kU);
  for (int d : deletable) inst.labels.at(vertex_id(static_cast<std::uint32_t>(d))).side = Side::kD;
  for (const auto& [a, b] : edges) {
    inst.graph.add_edge(vertex_id(static_cast<std::uint32_t>(a)),
                        vertex_id(static_cast<std::uint32_t>(b)));
  }
  return inst;
}

Measures measures(const Instance& inst) {
  Measures m;
  m.k = inst.k;
  int u_count = 0;
  int u_edges = 0;
  inst.graph.for_each_vertex([&](VertexId v) {
    if (inst.in_u(v)) {
      ++u_count;
      u_edges += static_cast<int>(inst.graph.loops(v));
      for (const auto& [w, mult] : inst.graph.neighbors(v)) {
        if (w > v && inst.in_u(w)) u_edges += static_cast<int>(mult);
      }
    } else if (inst.is_tent(v)) {
      ++m.tents;
    }
  });
  m.ell = static_cast<int>(
      component_count_if(inst.graph, [&](VertexId v) { return inst.in_u(v); }));
  m.ell_prime = u_count - u_edges;
  m.mu = m.k + m.ell - m.tents;
  m.mu_alpha = m.k + inst.alpha * m.ell_prime - m.tents;
  return m;
}

bool u_is_forest(const Instance& inst) {
  return is_forest_if(inst.graph, [&](VertexId v) { return inst.in_u(v); });
}

bool d_is_forest(const Instance& inst) {
  return is_forest_if(inst.graph, [&](VertexId v) { return inst.in_d(v); });
}

std::vector<int> u_component_labels(const Instance& inst) {
  DisjointSets sets(inst.graph.id_bound());
  inst.graph.for_each_vertex([&](VertexId v) {
    if (!inst.in_u(v)) return;
    for (const auto& [w, m] : inst.graph.neighbors(v)) {
      if (inst.in_u(w)) sets.unite(index_of(v), index_of(w));
    }
  });
  std::vector<int> label(inst.graph.id_bound(), -1);
  inst.graph.for_each_vertex([&](VertexId v) {
    if (inst.in_u(v)) label[index_of(v)] = static_cast<int>(sets.find(index_of(v)));
  });
  return label;
}

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::kTent: return "tent";
    case VertexClass::kSingle: return "single";
    case VertexClass::kDouble: return "double";
    case VertexClass::kStandard: return "standard";
  }
  return "?";
}

RootedView classify(const Instance& inst) {
  RootedView view;
  std::map<VertexId, std::vector<VertexId>> d_adj;
  const std::vector<VertexId> d = inst.d_vertices();
  for (VertexId v : d) {
    auto& list = d_adj[v];
    for (const auto& [w, m] : inst.graph.neighbors(v)) {
      if (inst.in_d(w)) list.push_back(w);
    }
    view.u_degree[v] = inst.u_degree(v);
  }

  // Root each tree of G[D] at its lowest-id vertex of D-degree <= 1 and
  // record a BFS order so classes can be assigned leaves-first.
  std::vector<VertexId> order;
  std::map<VertexId, bool> seen;
  for (VertexId start : d) {
    if (seen[start]) continue;
    std::vector<VertexId> component;
    std::deque<VertexId> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      component.push_back(v);
      for (VertexId w : d_adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    auto root_it = std::find_if(component.begin(), component.end(),
                                [&](VertexId v) { return d_adj[v].size() <= 1; });
    if (root_it == component.end()) {
      fail(ErrorCode::kInternalState, "G[D] is not a forest");
    }
    const VertexId root = *root_it;
    view.roots.push_back(root);
    view.parent[root] = std::nullopt;
    std::deque<VertexId> bfs{root};
    while (!bfs.empty()) {
      const VertexId v = bfs.front();
      bfs.pop_front();
      order.push_back(v);
      auto& kids = view.children[v];
      for (VertexId w : d_adj[v]) {
        if (view.parent.contains(w)) {
          if (view.parent[v] != w) fail(ErrorCode::kInternalState, "G[D] is not a forest");
          continue;
        }
        view.parent[w] = v;
        kids.push_back(w);
        bfs.push_back(w);
      }
    }
  }

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    const auto& kids = view.children[v];
    const int f = view.u_degree[v];
    VertexClass c = VertexClass::kStandard;
    if (inst.is_tent(v)) {
      c = VertexClass::kTent;
    } else if (f == 3 && kids.empty()) {
      c = VertexClass::kSingle;
    } else if (f == 0 && kids.size() == 2 &&
               view.cls.at(kids[0]) == VertexClass::kSingle &&
               view.cls.at(kids[1]) == VertexClass::kSingle) {
      c = VertexClass::kDouble;
    }
    view.cls[v] = c;
  }
  return view;
}

std::string to_string(const GuideType& t) {
  return "(" + std::to_string(t.f) + "," + std::to_string(t.s) + "," + std::to_string(t.d) + ")";
}

bool is_forbidden_guide_type(const GuideType& t) {
  static constexpr GuideType kForbidden[] = {{0, 0, 1}, {0, 1, 0}, {0, 0, 0}, {1, 0, 0},
                                             {2, 0, 0}, {3, 0, 0}, {0, 2, 0}};
  return std::find(std::begin(kForbidden), std::end(kForbidden), t) != std::end(kForbidden);
}

GuideInfo find_guide(const RootedView& view) {
  for (const auto& [v, c] : view.cls) {
    if (c != VertexClass::kStandard) continue;
    GuideType type{view.u_degree.at(v), 0, 0};
    bool guide = true;
    for (VertexId w : view.children.at(v)) {
      switch (view.cls.at(w)) {
        case VertexClass::kSingle: ++type.s; break;
        case VertexClass::kDouble: ++type.d; break;
        default: guide = false; break;
      }
      if (!guide) break;
    }
    if (guide) return GuideInfo{v, type, view.parent.at(v)};
  }
  fail(ErrorCode::kNoGuide, "no guide in D; a reduction rule is still applicable");
}

}  // namespace fvs
