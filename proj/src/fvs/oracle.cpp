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

#include "fvs/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "fvs/error.hpp"

namespace fvs::oracle {

bool acyclic(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (a == b) return false;
    adj[static_cast<std::size_t>(a)].push_back({b, i});
    adj[static_cast<std::size_t>(b)].push_back({a, i});
  }
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (state[static_cast<std::size_t>(s)]) continue;
    // Iterative DFS remembering the edge used to enter each vertex.
    std::vector<std::pair<int, std::size_t>> stack{{s, edges.size()}};
    while (!stack.empty()) {
      const auto [v, via] = stack.back();
      stack.pop_back();
      if (state[static_cast<std::size_t>(v)]) return false;
      state[static_cast<std::size_t>(v)] = 1;
      for (const auto& [w, e] : adj[static_cast<std::size_t>(v)]) {
        if (e == via) continue;
        if (state[static_cast<std::size_t>(w)]) return false;
        stack.push_back({w, e});
      }
    }
  }
  return true;
}

namespace {

// Visits all k-subsets of {0..n-1} in lexicographic order until `f` returns true.
template <class F>
bool for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

bool acyclic_without(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<bool>& removed) {
  std::vector<std::pair<int, int>> kept;
  for (const auto& [a, b] : edges) {
    if (!removed[static_cast<std::size_t>(a)] && !removed[static_cast<std::size_t>(b)]) {
      kept.push_back({a, b});
    }
  }
  return acyclic(n, kept);
}

}  // namespace

std::vector<int> brute_fvs(const SimpleGraph& g, const Budget& budget) {
  if (g.n > budget.max_vertices) {
    fail(ErrorCode::kCapacityExceeded, "oracle refuses graphs above " +
                                           std::to_string(budget.max_vertices) + " vertices");
  }
  std::vector<int> best;
  for (int size = 0; size <= g.n; ++size) {
    const bool hit = for_each_subset(g.n, size, [&](const std::vector<int>& x) {
      std::vector<bool> removed(static_cast<std::size_t>(g.n), false);
      for (int v : x) removed[static_cast<std::size_t>(v)] = true;
      if (!acyclic_without(g.n, g.edges, removed)) return false;
      best = x;
      return true;
    });
    if (hit) return best;
  }
  fail(ErrorCode::kInternalState, "removing every vertex must leave a forest");
}

DisjointAnswer brute_disjoint_fvs(const Instance& inst, const Budget& budget) {
  // Dense renumbering; parallel edges and loops are kept as separate entries.
  std::map<VertexId, int> dense;
  std::vector<VertexId> ids;
  inst.graph.for_each_vertex([&](VertexId v) {
    dense[v] = static_cast<int>(ids.size());
    ids.push_back(v);
  });
  const int n = static_cast<int>(ids.size());
  std::vector<std::pair<int, int>> edges;
  for (VertexId v : ids) {
    for (std::uint32_t i = 0; i < inst.graph.loops(v); ++i) edges.push_back({dense[v], dense[v]});
    for (const auto& [w, m] : inst.graph.neighbors(v)) {
      if (w < v) continue;
      for (std::uint32_t i = 0; i < m; ++i) edges.push_back({dense[v], dense[w]});
    }
  }
  std::vector<int> d;
  for (int i = 0; i < n; ++i) {
    if (inst.in_d(ids[static_cast<std::size_t>(i)])) d.push_back(i);
  }
  if (static_cast<int>(d.size()) > budget.max_vertices) {
    fail(ErrorCode::kCapacityExceeded, "oracle refuses more than " +
                                           std::to_string(budget.max_vertices) + " D-vertices");
  }

  DisjointAnswer out;
  const int m = static_cast<int>(d.size());
  for (int size = 0; size <= m; ++size) {
    const bool hit = for_each_subset(m, size, [&](const std::vector<int>& x) {
      std::vector<bool> removed(static_cast<std::size_t>(n), false);
      for (int i : x) removed[static_cast<std::size_t>(d[static_cast<std::size_t>(i)])] = true;
      if (!acyclic_without(n, edges, removed)) return false;
      for (int i : x) out.solution.push_back(ids[static_cast<std::size_t>(d[static_cast<std::size_t>(i)])]);
      return true;
    });
    if (hit) {
      out.minimum = size;
      out.yes = size <= inst.k;
      return out;
    }
  }
  return out;  // G[U] has a cycle
}

std::vector<std::size_t> brute_parity(const ParityInput& p, const Budget& budget) {
  if (p.pairs.size() > budget.max_pairs) {
    fail(ErrorCode::kCapacityExceeded, "oracle refuses more than " +
                                           std::to_string(budget.max_pairs) + " pairs");
  }
  std::map<VertexId, int> dense;
  p.h.for_each_vertex([&](VertexId v) { dense.emplace(v, static_cast<int>(dense.size())); });
  const int n = static_cast<int>(dense.size());
  const int m = static_cast<int>(p.pairs.size());
  for (int size = m; size >= 0; --size) {
    std::vector<std::size_t> best;
    const bool hit = for_each_subset(m, size, [&](const std::vector<int>& x) {
      std::vector<std::pair<int, int>> edges;
      for (int i : x) {
        const ParityPair& pr = p.pairs[static_cast<std::size_t>(i)];
        edges.push_back({dense.at(pr.first.a), dense.at(pr.first.b)});
        edges.push_back({dense.at(pr.second.a), dense.at(pr.second.b)});
      }
      if (!acyclic(n, edges)) return false;
      best.assign(x.begin(), x.end());
      return true;
    });
    if (hit) return best;
  }
  return {};
}

}  // namespace fvs::oracle
