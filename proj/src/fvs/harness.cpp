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

#include "fvs/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "fvs/disjoint_sets.hpp"
#include "fvs/error.hpp"
#include "fvs/oracle.hpp"

namespace fvs::harness {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Canonical code of a graph on at most 8 vertices: color refinement, then the
// largest adjacency code over all orderings that respect the color classes.
std::uint64_t canonical_code(const std::vector<std::uint8_t>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = std::popcount(adj[static_cast<std::size_t>(v)]);
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      for (int w = 0; w < n; ++w) {
        if (adj[static_cast<std::size_t>(v)] >> w & 1) s.push_back(color[static_cast<std::size_t>(w)]);
      }
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), color[static_cast<std::size_t>(v)]);
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      next[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) - uniq.begin());
    }
    const bool stable = std::set<int>(next.begin(), next.end()).size() ==
                        std::set<int>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(color[static_cast<std::size_t>(a)], a) < std::pair(color[static_cast<std::size_t>(b)], b);
  });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                        color[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) {
      ++j;
    }
    cells.push_back({i, j});
    i = j;
  }

  std::uint64_t best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == cells.size()) {
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          code = code << 1 |
                 (adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >>
                      order[static_cast<std::size_t>(j)] & 1u);
        }
      }
      best = std::max(best, code);
      return;
    }
    const auto [b, e] = cells[cell];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      rec(cell + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  return best;
}

SimpleGraph from_adjacency(const std::vector<std::uint8_t>& adj) {
  SimpleGraph g;
  g.n = static_cast<int>(adj.size());
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      if (adj[static_cast<std::size_t>(a)] >> b & 1) g.edges.push_back({a, b});
    }
  }
  return g;
}

// Origins of `inst` mapped back to its vertices; checks that removing them
// leaves a forest, using the oracle's own acyclicity test.
bool certificate_ok(const Instance& inst, const std::vector<VertexId>& origins, int budget) {
  const std::unordered_set<VertexId> cut(origins.begin(), origins.end());
  if (cut.size() != origins.size() || static_cast<int>(origins.size()) > budget) return false;
  std::map<VertexId, int> dense;
  std::size_t hit = 0;
  bool only_d = true;
  inst.graph.for_each_vertex([&](VertexId v) {
    if (cut.contains(inst.origin(v))) {
      ++hit;
      only_d = only_d && inst.in_d(v);
      return;
    }
    dense.emplace(v, static_cast<int>(dense.size()));
  });
  if (hit != origins.size() || !only_d) return false;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [v, i] : dense) {
    for (std::uint32_t l = 0; l < inst.graph.loops(v); ++l) edges.push_back({i, i});
    for (const auto& [w, m] : inst.graph.neighbors(v)) {
      if (w < v || !dense.contains(w)) continue;
      for (std::uint32_t c = 0; c < m; ++c) edges.push_back({i, dense.at(w)});
    }
  }
  return oracle::acyclic(static_cast<int>(dense.size()), edges);
}

std::vector<VertexId> origins_of(const Instance& inst, const std::vector<VertexId>& ids) {
  std::vector<VertexId> out;
  for (VertexId v : ids) out.push_back(inst.origin(v));
  return out;
}

std::string str(const Instance& inst) {
  std::string s = "n=" + std::to_string(inst.graph.vertex_count()) + " k=" + std::to_string(inst.k) + " U={";
  for (VertexId v : inst.u_vertices()) s += std::to_string(index_of(v)) + ",";
  s += "} E={";
  inst.graph.for_each_vertex([&](VertexId v) {
    for (const auto& [w, m] : inst.graph.neighbors(v)) {
      if (w > v) s += std::to_string(index_of(v)) + "-" + std::to_string(index_of(w)) + (m > 1 ? "x" + std::to_string(m) : "") + ",";
    }
  });
  return s + "}";
}

std::string str(const SimpleGraph& g) {
  std::string s = "n=" + std::to_string(g.n) + " E={";
  for (const auto& [a, b] : g.edges) s += std::to_string(a) + "-" + std::to_string(b) + ",";
  return s + "}";
}

}  // namespace

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  passed = false;
  if (samples.size() < 10) samples.push_back(what);
}

SimpleGraph gnp(int n, double p, Rng& rng) {
  SimpleGraph g;
  g.n = n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng, p)) g.edges.push_back({a, b});
    }
  }
  return g;
}

std::vector<SimpleGraph> all_graphs(int n) {
  if (n < 0 || n > 8) fail(ErrorCode::kCapacityExceeded, "graph enumeration supports n <= 8");
  static std::vector<std::vector<std::vector<std::uint8_t>>> levels{{{}}};
  while (static_cast<int>(levels.size()) <= n) {
    const int m = static_cast<int>(levels.size());  // building graphs on m vertices
    std::map<std::uint64_t, std::vector<std::uint8_t>> seen;
    for (const auto& base : levels.back()) {
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<std::uint8_t> adj = base;
        adj.push_back(static_cast<std::uint8_t>(mask));
        for (int v = 0; v < m - 1; ++v) {
          if (mask >> v & 1) adj[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1u << (m - 1));
        }
        seen.emplace(canonical_code(adj), std::move(adj));
      }
    }
    std::vector<std::vector<std::uint8_t>> level;
    for (auto& [code, adj] : seen) level.push_back(std::move(adj));
    levels.push_back(std::move(level));
  }
  std::vector<SimpleGraph> out;
  for (const auto& adj : levels[static_cast<std::size_t>(n)]) out.push_back(from_adjacency(adj));
  return out;
}

bool is_connected(const SimpleGraph& g) {
  if (g.n == 0) return true;
  DisjointSets sets(static_cast<std::size_t>(g.n));
  for (const auto& [a, b] : g.edges) sets.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return sets.set_count() == 1;
}

Instance random_instance(int max_n, bool allow_cyclic_u, Rng& rng) {
  const int n = uniform(rng, 1, max_n);
  static constexpr double kDensity[] = {0.2, 0.35, 0.5, 0.65};
  const double p = kDensity[uniform(rng, 0, 3)];
  const bool cyclic_u = allow_cyclic_u && coin(rng, 0.3);
  std::vector<int> d;
  std::vector<bool> in_d(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    in_d[static_cast<std::size_t>(v)] = coin(rng, 0.6);
    if (in_d[static_cast<std::size_t>(v)]) d.push_back(v);
  }
  DisjointSets forest(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!coin(rng, p)) continue;
      const bool da = in_d[static_cast<std::size_t>(a)];
      const bool db = in_d[static_cast<std::size_t>(b)];
      if (da == db && !(cyclic_u && !da) &&
          !forest.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) {
        continue;
      }
      edges.push_back({a, b});
    }
  }
  const int k = d.empty() ? 0 : uniform(rng, 0, static_cast<int>(d.size()));
  return make_instance(n, edges, d, k, 1.0);
}

Instance random_tent_instance(int max_d, Rng& rng) {
  for (;;) {
    const int u = uniform(rng, 3, 9);
    DisjointSets forest(static_cast<std::size_t>(u));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < u; ++v) {
      if (!coin(rng, 0.5)) continue;
      const int w = uniform(rng, 0, v - 1);
      forest.unite(static_cast<std::size_t>(v), static_cast<std::size_t>(w));
      edges.push_back({w, v});
    }
    std::map<std::size_t, std::vector<int>> trees;
    for (int v = 0; v < u; ++v) trees[forest.find(static_cast<std::size_t>(v))].push_back(v);
    if (trees.size() < 3) continue;
    std::vector<std::vector<int>> comps;
    for (auto& [root, members] : trees) comps.push_back(members);

    const int d = uniform(rng, 1, max_d);
    std::vector<int> deletable;
    for (int t = 0; t < d; ++t) {
      const int v = u + t;
      deletable.push_back(v);
      std::shuffle(comps.begin(), comps.end(), rng);
      for (int c = 0; c < 3; ++c) {
        const auto& members = comps[static_cast<std::size_t>(c)];
        edges.push_back({v, members[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(members.size()) - 1))]});
      }
    }
    return make_instance(u + d, edges, deletable, uniform(rng, 0, d), 1.0);
  }
}

Instance random_nobound_instance(Rng& rng) {
  for (;;) {
    const int u = uniform(rng, 3, 8);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < u; ++v) {
      if (coin(rng, 0.4)) edges.push_back({uniform(rng, 0, v - 1), v});
    }
    std::vector<int> pool(static_cast<std::size_t>(u));
    for (int v = 0; v < u; ++v) pool[static_cast<std::size_t>(v)] = v;
    const int tents = uniform(rng, 1, 6);
    const int extras = uniform(rng, 0, 2);
    std::vector<int> deletable;
    int next = u;
    for (int t = 0; t < tents; ++t, ++next) {
      deletable.push_back(next);
      std::shuffle(pool.begin(), pool.end(), rng);
      for (int c = 0; c < 3; ++c) edges.push_back({next, pool[static_cast<std::size_t>(c)]});
    }
    for (int e = 0; e < extras; ++e, ++next) {
      std::shuffle(pool.begin(), pool.end(), rng);
      const int fan = uniform(rng, 1, 3);
      for (int c = 0; c < fan; ++c) edges.push_back({next, pool[static_cast<std::size_t>(c)]});
      if (e > 0 && coin(rng, 0.5)) edges.push_back({next - 1, next});
      deletable.push_back(next);
    }
    Instance inst = make_instance(next, edges, deletable, 0, 1.0);
    const Measures m = measures(inst);
    const int k = static_cast<int>(std::floor(m.tents - m.ell / 2.0));
    if (m.tents < 1 || k < 0) continue;
    inst.k = k;
    return inst;
  }
}

Instance hard_instance(int k, Rng& rng) {
  const int u = k + 1;
  const int d = 2 * k + 2;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deletable;
  std::vector<int> pool(static_cast<std::size_t>(u));
  for (int v = 0; v < u; ++v) pool[static_cast<std::size_t>(v)] = v;
  for (int i = 0; i < d; ++i) {
    const int v = u + i;
    deletable.push_back(v);
    if (i > 0) edges.push_back({v - 1, v});
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int c = 0; c < 3; ++c) edges.push_back({v, pool[static_cast<std::size_t>(c)]});
  }
  return make_instance(u + d, edges, deletable, k, 1.0);
}

ExactnessResult exactness_suite(const ExactnessConfig& config) {
  const auto start = Clock::now();
  ExactnessResult out;
  out.exactness.name = "solver exactness";
  out.measures.name = "measure monotonicity";
  std::uint64_t graphs = 0;
  std::uint64_t fallbacks = 0;

  auto check = [&](const SimpleGraph& g, const std::string& order) {
    ++graphs;
    const auto brute = oracle::brute_fvs(g);
    for (Family family : {Family::kSimple, Family::kFast}) {
      FvsOptions options;
      options.solve.family = family;
      parse_order(order, options);
      try {
        const FvsOutcome r = solve_fvs_minimum(g, options);
        out.exactness.expect(r.k == static_cast<int>(brute.size()),
                             std::string(to_string(family)) + " minimum " + std::to_string(r.k) +
                                 " != oracle " + std::to_string(brute.size()) + " on " + str(g));
        out.exactness.expect(static_cast<int>(r.solution.size()) == r.k &&
                                 oracle::acyclic(g.n, [&] {
                                   std::vector<std::pair<int, int>> kept;
                                   for (const auto& [a, b] : g.edges) {
                                     if (!std::binary_search(r.solution.begin(), r.solution.end(), a) &&
                                         !std::binary_search(r.solution.begin(), r.solution.end(), b)) {
                                       kept.push_back({a, b});
                                     }
                                   }
                                   return kept;
                                 }()),
                             "invalid certificate on " + str(g));
        out.measures.checks += r.stats.measure_checks;
        out.measures.failures += r.stats.measure_violations;
        if (r.stats.measure_violations > 0) {
          out.measures.passed = false;
          for (const auto& s : r.stats.violation_samples) {
            if (out.measures.samples.size() < 10) out.measures.samples.push_back(s + " on " + str(g));
          }
        }
        fallbacks += r.stats.fallback_branches;
      } catch (const std::exception& e) {
        out.exactness.expect(false, std::string(to_string(family)) + " threw '" + e.what() +
                                        "' on " + str(g));
      }
    }
  };

  std::uint64_t enumerated = 0;
  for (int n = 1; n <= config.enumerate_up_to; ++n) {
    for (const SimpleGraph& g : all_graphs(n)) {
      if (!is_connected(g)) continue;
      ++enumerated;
      check(g, "input");
    }
  }
  Rng rng(config.seed);
  static constexpr double kDensity[] = {0.2, 0.4, 0.6};
  for (int i = 0; i < config.random_samples; ++i) {
    const int n = uniform(rng, 1, config.random_max_n);
    check(gnp(n, kDensity[i % 3], rng), "random:" + std::to_string(i));
  }

  out.exactness.detail = std::to_string(enumerated) + " connected graphs on <= " +
                         std::to_string(config.enumerate_up_to) + " vertices + " +
                         std::to_string(config.random_samples) + " G(n,p) samples with n <= " +
                         std::to_string(config.random_max_n) + ", 2 families, " +
                         std::to_string(out.exactness.failures) + " mismatches";
  out.measures.detail = std::to_string(out.measures.checks) + " measure checks, " +
                        std::to_string(out.measures.failures) + " violations, " +
                        std::to_string(fallbacks) + " fallback branches";
  out.exactness.seconds = out.measures.seconds = seconds_since(start);
  (void)graphs;
  return out;
}

SuiteResult reduction_safeness_suite(int trials, int max_n, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "reduction safeness";
  Rng rng(seed);
  std::map<std::string, std::uint64_t> fired;
  for (int trial = 0; trial < trials; ++trial) {
    const Family family = trial % 2 ? Family::kFast : Family::kSimple;
    Instance before = random_instance(max_n, family == Family::kFast, rng);
    before.alpha = family == Family::kFast ? kDefaultFastAlpha : 1.0;
    // Walk a few steps in so later rules get exercised too.
    for (int s = uniform(rng, 0, 6); s > 0; --s) {
      Instance probe = before;
      if (reduce_step(probe, family).kind != OutcomeKind::kChanged) break;
      before = std::move(probe);
    }
    const oracle::DisjointAnswer a = oracle::brute_disjoint_fvs(before);
    Instance after = before;
    RuleOutcome r;
    try {
      r = reduce_step(after, family);
    } catch (const std::exception& e) {
      out.expect(false, std::string("rule threw '") + e.what() + "' on " + str(before));
      continue;
    }
    ++fired[to_string(r.rule)];
    const std::string where = std::string(to_string(r.rule)) + " on " + str(before);
    switch (r.kind) {
      case OutcomeKind::kIrreducible:
        out.expect(true, "");
        break;
      case OutcomeKind::kNoInstance:
        out.expect(!a.yes, "NO for a YES-instance: " + where);
        break;
      case OutcomeKind::kPolySolved: {
        out.expect(r.poly_yes == a.yes, "poly answer differs: " + where);
        if (r.poly_yes) {
          std::vector<VertexId> cert = r.forced;
          cert.insert(cert.end(), r.certificate.begin(), r.certificate.end());
          out.expect(certificate_ok(before, cert, before.k) &&
                         static_cast<int>(cert.size()) == a.minimum,
                     "poly certificate invalid or not minimum: " + where);
        }
        break;
      }
      case OutcomeKind::kChanged: {
        const oracle::DisjointAnswer b = oracle::brute_disjoint_fvs(after);
        out.expect(after.k == before.k - static_cast<int>(r.forced.size()), "budget bookkeeping: " + where);
        out.expect(a.yes == b.yes, "answer changed: " + where);
        const bool both = a.minimum.has_value() && b.minimum.has_value();
        out.expect(a.minimum.has_value() == b.minimum.has_value() &&
                       (!both || *a.minimum == *b.minimum + static_cast<int>(r.forced.size())),
                   "minimum changed: " + where);
        if (b.minimum) {
          std::vector<VertexId> cert = r.forced;
          const auto mapped = origins_of(after, b.solution);
          cert.insert(cert.end(), mapped.begin(), mapped.end());
          out.expect(certificate_ok(before, cert, static_cast<int>(before.graph.vertex_count())),
                     "back-mapped certificate invalid: " + where);
        }
        break;
      }
    }
  }
  std::string hist;
  for (const auto& [name, count] : fired) hist += " " + name + ":" + std::to_string(count);
  out.detail = std::to_string(trials) + " single-rule applications," + hist + "; " +
               std::to_string(out.failures) + " violations";
  out.seconds = seconds_since(start);
  return out;
}

SuiteResult parity_suite(int trials, int max_d, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "matroid parity correspondence";
  Rng rng(seed);
  std::uint64_t subsets = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const Instance inst = random_tent_instance(max_d, rng);
    const std::string where = " on " + str(inst);
    try {
      const TentInstance t = make_tent_instance(inst);
      const ParityInput p = build_parity_input(t);

      std::map<VertexId, int> dense;
      inst.graph.for_each_vertex([&](VertexId v) { dense.emplace(v, static_cast<int>(dense.size())); });
      const int n = static_cast<int>(dense.size());
      std::vector<std::pair<int, int>> u_edges;
      for (VertexId v : inst.u_vertices()) {
        for (const auto& [w, m] : inst.graph.neighbors(v)) {
          if (w > v && inst.in_u(w)) u_edges.push_back({dense[v], dense[w]});
        }
      }
      const std::vector<VertexId> d = inst.d_vertices();
      std::map<VertexId, std::size_t> pair_of;
      for (std::size_t i = 0; i < p.pairs.size(); ++i) pair_of[p.pairs[i].tent] = i;

      for (std::uint32_t mask = 0; mask < (1u << d.size()); ++mask) {
        ++subsets;
        std::vector<std::pair<int, int>> s_and_a = u_edges;
        std::vector<std::pair<int, int>> kept = u_edges;
        std::vector<std::size_t> selected;
        for (std::size_t i = 0; i < d.size(); ++i) {
          const VertexId v = d[i];
          const auto& ends = t.edge_ends.at(v);
          s_and_a.push_back({dense[v], dense[ends[0]]});
          if (!(mask >> i & 1u)) continue;
          selected.push_back(pair_of.at(v));
          for (int e = 0; e < 3; ++e) kept.push_back({dense[v], dense[ends[static_cast<std::size_t>(e)]]});
          s_and_a.push_back({dense[v], dense[ends[1]]});
          s_and_a.push_back({dense[v], dense[ends[2]]});
        }
        std::sort(selected.begin(), selected.end());
        const bool in_g = oracle::acyclic(n, s_and_a);
        const bool forest = oracle::acyclic(n, kept);
        const bool in_h = pairs_acyclic(p, selected);
        out.expect(in_g == forest && forest == in_h,
                   "correspondence fails for J mask " + std::to_string(mask) + where);
      }

      const auto brute_pairs = oracle::brute_parity(p);
      const auto fast_pairs = graphic_matroid_parity(p);
      out.expect(brute_pairs.size() == fast_pairs.size() && pairs_acyclic(p, fast_pairs),
                 "parity optimum " + std::to_string(fast_pairs.size()) + " != " +
                     std::to_string(brute_pairs.size()) + where);
      const TentSolution sol = solve_tent_instance(t);
      const oracle::DisjointAnswer a = oracle::brute_disjoint_fvs(inst);
      out.expect(a.minimum && static_cast<int>(sol.deletion.size()) == *a.minimum && sol.yes == a.yes,
                 "tent solution differs from oracle" + where);
    } catch (const std::exception& e) {
      out.expect(false, std::string("threw '") + e.what() + "'" + where);
    }
  }
  out.detail = std::to_string(trials) + " tent instances, " + std::to_string(subsets) +
               " subsets J checked three ways; " + std::to_string(out.failures) + " violations";
  out.seconds = seconds_since(start);
  return out;
}

SuiteResult nobound_suite(int trials, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "NO-bound";
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const Instance inst = random_nobound_instance(rng);
    const std::string where = " on " + str(inst);
    out.expect(!oracle::brute_disjoint_fvs(inst).yes, "oracle says YES" + where);
    for (Family family : {Family::kSimple, Family::kFast}) {
      SolveOptions options;
      options.family = family;
      SolveStats stats;
      try {
        out.expect(!solve_disjoint(inst, options, stats).yes,
                   std::string(to_string(family)) + " says YES" + where);
      } catch (const std::exception& e) {
        out.expect(false, std::string(to_string(family)) + " threw '" + e.what() + "'" + where);
      }
    }
  }
  out.detail = std::to_string(trials) + " instances with t >= k + ell/2; " +
               std::to_string(out.failures) + " violations";
  out.seconds = seconds_since(start);
  return out;
}

SuiteResult disjoint_suite(int trials, int max_n, std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "Disjoint-FVS oracle agreement";
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const Instance inst = random_instance(max_n, true, rng);
    const oracle::DisjointAnswer a = oracle::brute_disjoint_fvs(inst);
    for (Family family : {Family::kSimple, Family::kFast}) {
      SolveOptions options;
      options.family = family;
      SolveStats stats;
      try {
        const DisjointOutcome r = solve_disjoint(inst, options, stats);
        out.expect(r.yes == a.yes, std::string(to_string(family)) + " answer differs on " + str(inst));
        if (r.yes) {
          out.expect(certificate_ok(inst, r.certificate, inst.k),
                     std::string(to_string(family)) + " certificate invalid on " + str(inst));
        }
        out.expect(stats.measure_violations == 0,
                   std::string(to_string(family)) + " measure violation on " + str(inst));
      } catch (const std::exception& e) {
        out.expect(false, std::string(to_string(family)) + " threw '" + e.what() + "' on " + str(inst));
      }
    }
  }
  out.detail = std::to_string(trials) + " random instances, 2 families; " +
               std::to_string(out.failures) + " mismatches";
  out.seconds = seconds_since(start);
  return out;
}

ScalingResult scaling_suite(int k_lo, int k_hi, int samples, std::uint64_t seed) {
  const auto start = Clock::now();
  ScalingResult out;
  out.suite.name = "scaling";
  Rng rng(seed);
  const double phi = std::numbers::phi;
  for (int k = k_lo; k <= k_hi; ++k) {
    ScalingPoint pt;
    pt.k = k;
    for (int s = 0; s < samples; ++s) {
      const Instance inst = hard_instance(k, rng);
      SolveOptions options;
      options.family = Family::kSimple;
      SolveStats stats;
      solve_disjoint(inst, options, stats);
      pt.mean_leaves += static_cast<double>(stats.leaves) / samples;
      pt.log_leaves += std::log(static_cast<double>(std::max<std::uint64_t>(stats.leaves, 1))) / samples;
    }
    out.constant = std::max(out.constant, pt.mean_leaves / std::pow(phi, 2.0 * k));
    out.points.push_back(pt);
  }
  // Least-squares slope of mean ln(leaves) against k.
  double mk = 0;
  double ml = 0;
  for (const auto& p : out.points) {
    mk += p.k;
    ml += p.log_leaves;
  }
  mk /= static_cast<double>(out.points.size());
  ml /= static_cast<double>(out.points.size());
  double num = 0;
  double den = 0;
  for (const auto& p : out.points) {
    num += (p.k - mk) * (p.log_leaves - ml);
    den += (p.k - mk) * (p.k - mk);
  }
  out.slope = den > 0 ? num / den : 0;
  out.limit = 2 * std::log(phi) * 1.05;
  out.suite.expect(out.slope <= out.limit, "slope " + std::to_string(out.slope) + " exceeds " +
                                               std::to_string(out.limit));
  out.suite.detail = "slope " + std::to_string(out.slope) + " <= " + std::to_string(out.limit) +
                     ", C = " + std::to_string(out.constant);
  out.suite.seconds = seconds_since(start);
  return out;
}

std::vector<BenchRow> bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  Rng rng(config.seed);
  double p = 0;
  const bool hard = config.generator == "hard";
  if (!hard) {
    if (config.generator.rfind("gnp:", 0) != 0) {
      fail(ErrorCode::kInvalidArgument, "unknown generator '" + config.generator + "'");
    }
    try {
      p = std::stod(config.generator.substr(4));
    } catch (const std::logic_error&) {
      fail(ErrorCode::kInvalidArgument, "bad edge probability in '" + config.generator + "'");
    }
    if (!(p >= 0 && p <= 1)) fail(ErrorCode::kInvalidArgument, "edge probability must lie in [0, 1]");
  }
  for (int size : config.sizes) {
    if (size < 0) fail(ErrorCode::kInvalidArgument, "sizes must be non-negative");
    BenchRow row;
    row.size = size;
    const auto start = Clock::now();
    if (hard) {
      const Instance inst = hard_instance(size, rng);
      SolveOptions options;
      options.family = config.family;
      options.alpha = config.alpha;
      SolveStats stats;
      row.yes = solve_disjoint(inst, options, stats).yes;
      row.k = size;
      row.nodes = stats.nodes;
      row.leaves = stats.leaves;
    } else {
      FvsOptions options;
      options.solve.family = config.family;
      options.solve.alpha = config.alpha;
      const FvsOutcome r = solve_fvs_minimum(gnp(size, p, rng), options);
      row.yes = r.yes;
      row.k = r.k;
      row.nodes = r.stats.nodes;
      row.leaves = r.stats.leaves;
    }
    row.millis = seconds_since(start) * 1e3;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fvs::harness
