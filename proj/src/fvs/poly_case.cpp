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

#include "fvs/poly_case.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "fvs/disjoint_sets.hpp"
#include "fvs/error.hpp"

namespace fvs {

namespace {

std::string name(VertexId v) { return std::to_string(index_of(v)); }

VertexId resolve(const std::unordered_map<VertexId, VertexId>& forward, VertexId v) {
  for (auto it = forward.find(v); it != forward.end(); it = forward.find(v)) v = it->second;
  return v;
}

class ParitySearch {
 public:
  explicit ParitySearch(const ParityInput& p) {
    std::unordered_map<VertexId, std::size_t> dense;
    p.h.for_each_vertex([&](VertexId v) { dense.emplace(v, dense.size()); });
    vertex_count_ = dense.size();
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
      const ParityPair& pair = p.pairs[i];
      Pair c{i, dense.at(pair.first.a), dense.at(pair.first.b), dense.at(pair.second.a),
             dense.at(pair.second.b)};
      const bool loop = c.a1 == c.b1 || c.a2 == c.b2;
      const bool parallel = (c.a1 == c.a2 && c.b1 == c.b2) || (c.a1 == c.b2 && c.b1 == c.a2);
      if (!loop && !parallel) candidates_.push_back(c);
    }
  }

  std::vector<std::size_t> run() {
    greedy();
    RollbackDisjointSets sets(vertex_count_);
    std::vector<std::size_t> chosen;
    search(0, sets, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  struct Pair {
    std::size_t index;
    std::size_t a1, b1, a2, b2;
  };

  void greedy() {
    DisjointSets sets(vertex_count_);
    for (const Pair& c : candidates_) {
      if (sets.same(c.a1, c.b1)) continue;
      // Both edges must fit together, so probe on a scratch copy.
      DisjointSets probe = sets;
      probe.unite(c.a1, c.b1);
      if (probe.same(c.a2, c.b2)) continue;
      probe.unite(c.a2, c.b2);
      sets = std::move(probe);
      best_.push_back(c.index);
    }
  }

  // Each selected pair spends two units of rank, so the rank of the chosen
  // edges plus everything still selectable bounds the final cardinality.
  std::size_t upper_bound(std::size_t from, const RollbackDisjointSets& sets,
                          std::size_t chosen) const {
    DisjointSets scratch(vertex_count_);
    std::size_t rank = 0;
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      if (scratch.unite(v, sets.find(v))) ++rank;
    }
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const Pair& c = candidates_[i];
      if (scratch.unite(c.a1, c.b1)) ++rank;
      if (scratch.unite(c.a2, c.b2)) ++rank;
    }
    return rank / 2 >= chosen ? rank / 2 : chosen;
  }

  void search(std::size_t i, RollbackDisjointSets& sets, std::vector<std::size_t>& chosen) {
    if (chosen.size() > best_.size()) best_ = chosen;
    if (i == candidates_.size()) return;
    if (chosen.size() + (candidates_.size() - i) <= best_.size()) return;
    if (upper_bound(i, sets, chosen.size()) <= best_.size()) return;

    const Pair& c = candidates_[i];
    const std::size_t mark = sets.checkpoint();
    if (sets.unite(c.a1, c.b1) && sets.unite(c.a2, c.b2)) {
      chosen.push_back(c.index);
      search(i + 1, sets, chosen);
      chosen.pop_back();
    }
    sets.rollback(mark);
    search(i + 1, sets, chosen);
  }

  std::size_t vertex_count_ = 0;
  std::vector<Pair> candidates_;
  std::vector<std::size_t> best_;
};

}  // namespace

TentInstance make_tent_instance(const Instance& inst) {
  if (!u_is_forest(inst)) fail(ErrorCode::kContractViolation, "G[U] is not a forest");
  const std::vector<int> comp = u_component_labels(inst);
  TentInstance t{inst, {}};
  for (VertexId v : inst.d_vertices()) {
    if (!inst.is_tent(v)) {
      fail(ErrorCode::kContractViolation, "vertex " + name(v) + " is not a tent");
    }
    std::array<VertexId, 3> ends{};
    std::size_t i = 0;
    for (const auto& [w, m] : inst.graph.neighbors(v)) {
      if (m != 1) fail(ErrorCode::kContractViolation, "tent " + name(v) + " has a parallel edge");
      ends[i++] = w;
    }
    const int c0 = comp[index_of(ends[0])];
    const int c1 = comp[index_of(ends[1])];
    const int c2 = comp[index_of(ends[2])];
    if (c0 == c1 || c0 == c2 || c1 == c2) {
      fail(ErrorCode::kContractViolation,
           "tent " + name(v) + " has two neighbours in one tree of G[U]");
    }
    t.edge_ends.emplace(v, ends);
  }
  return t;
}

ParityInput build_parity_input(const TentInstance& t) {
  const Instance& inst = t.inst;
  ParityInput out{inst.graph, {}};
  std::unordered_map<VertexId, VertexId> forward;

  auto contract = [&](VertexId a, VertexId b) {
    const VertexId ra = resolve(forward, a);
    const VertexId rb = resolve(forward, b);
    if (ra == rb) fail(ErrorCode::kInternalState, "contraction set is not acyclic");
    const VertexId x = out.h.contract_edge(ra, rb);
    forward[ra] = x;
    forward[rb] = x;
  };

  for (VertexId u : inst.u_vertices()) {
    for (const auto& [w, m] : inst.graph.neighbors(u)) {
      if (w > u && inst.in_u(w)) contract(u, w);
    }
  }
  for (const auto& [v, ends] : t.edge_ends) contract(v, ends[0]);

  std::map<std::pair<VertexId, VertexId>, std::uint32_t> expected;
  auto image = [&](VertexId v, VertexId end) {
    ParityEdge e{resolve(forward, v), resolve(forward, end)};
    if (e.b < e.a) std::swap(e.a, e.b);
    ++expected[{e.a, e.b}];
    return e;
  };
  for (const auto& [v, ends] : t.edge_ends) {
    out.pairs.push_back(ParityPair{v, image(v, ends[1]), image(v, ends[2])});
  }

  if (out.h.edge_count() != 2 * t.edge_ends.size()) {
    fail(ErrorCode::kInternalState, "contracted graph has unexpected edge count");
  }
  for (const auto& [ends, mult] : expected) {
    if (out.h.multiplicity(ends.first, ends.second) != mult) {
      fail(ErrorCode::kInternalState, "contracted graph disagrees with labelled pairs");
    }
  }
  return out;
}

std::vector<std::size_t> graphic_matroid_parity(const ParityInput& p) {
  return ParitySearch(p).run();
}

bool pairs_acyclic(const ParityInput& p, const std::vector<std::size_t>& selected) {
  DisjointSets sets(p.h.id_bound());
  for (std::size_t i : selected) {
    for (const ParityEdge& e : {p.pairs.at(i).first, p.pairs.at(i).second}) {
      if (!sets.unite(index_of(e.a), index_of(e.b))) return false;
    }
  }
  return true;
}

TentSolution solve_tent_instance(const TentInstance& t) {
  const ParityInput input = build_parity_input(t);
  const std::vector<std::size_t> kept = graphic_matroid_parity(input);
  if (!pairs_acyclic(input, kept)) {
    fail(ErrorCode::kVerificationFailure, "matroid parity returned a cyclic selection");
  }

  std::unordered_set<VertexId> keep;
  for (std::size_t i : kept) keep.insert(input.pairs[i].tent);
  TentSolution out;
  for (const auto& [v, ends] : t.edge_ends) {
    if (!keep.contains(v)) out.deletion.push_back(v);
  }
  std::unordered_set<VertexId> deleted(out.deletion.begin(), out.deletion.end());
  if (!is_forest_if(t.inst.graph, [&](VertexId v) { return !deleted.contains(v); })) {
    fail(ErrorCode::kVerificationFailure, "tent solution does not leave a forest");
  }
  out.yes = static_cast<int>(out.deletion.size()) <= t.inst.k;
  return out;
}

}  // namespace fvs
