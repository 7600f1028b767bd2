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
#include <random>
#include <string>
#include <vector>

#include "fvs/instance.hpp"
#include "fvs/poly_case.hpp"
#include "fvs/simple_graph.hpp"
#include "fvs/solver.hpp"

// Instance generators, oracle cross-check suites and the scaling benchmark.
namespace fvs::harness {

using Rng = std::mt19937_64;

SimpleGraph gnp(int n, double p, Rng& rng);

// One representative of every isomorphism class of graphs on n vertices
// (n <= 8), connected or not.
std::vector<SimpleGraph> all_graphs(int n);
bool is_connected(const SimpleGraph& g);

// Random Disjoint-FVS instance on at most max_n vertices with forests G[D]
// and, unless allow_cyclic_u, G[U].
Instance random_instance(int max_n, bool allow_cyclic_u, Rng& rng);

// Every D-vertex a tent with neighbours in three distinct trees of G[U].
Instance random_tent_instance(int max_d, Rng& rng);

// Forest G[U] and tents t >= 1 with t >= k + ell / 2.
Instance random_nobound_instance(Rng& rng);

// Compression-like NO-instance: k + 1 isolated U-vertices and a D-path of
// 2k + 2 vertices, each joined to 3 random U-vertices. Among the shapes tried
// (random trees, caterpillars, binary trees, U-degree 2) the path makes the
// simple search tree grow fastest.
Instance hard_instance(int k, Rng& rng);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions
  std::string detail;                // one-line summary for reports
  double seconds = 0;

  void expect(bool ok, const std::string& what);
};

struct ExactnessConfig {
  int enumerate_up_to = 8;  // all connected graphs on <= this many vertices
  int random_samples = 1000;
  int random_max_n = 12;
  std::uint64_t seed = 1;
};

// Both solver families against brute_fvs, with verified certificates. Also
// reports the measure checks collected along the way.
struct ExactnessResult {
  SuiteResult exactness;
  SuiteResult measures;
};
ExactnessResult exactness_suite(const ExactnessConfig& config);

SuiteResult reduction_safeness_suite(int trials, int max_n, std::uint64_t seed);
SuiteResult parity_suite(int trials, int max_d, std::uint64_t seed);
SuiteResult nobound_suite(int trials, std::uint64_t seed);
SuiteResult disjoint_suite(int trials, int max_n, std::uint64_t seed);

struct ScalingPoint {
  int k = 0;
  double mean_leaves = 0;
  double log_leaves = 0;  // mean of ln(leaves) over the samples
};

struct ScalingResult {
  SuiteResult suite;
  std::vector<ScalingPoint> points;
  double slope = 0;
  double limit = 0;
  double constant = 0;  // fitted C in leaves <= C * phi^(2k)
};
ScalingResult scaling_suite(int k_lo, int k_hi, int samples, std::uint64_t seed);

struct BenchRow {
  int size = 0;
  int k = 0;
  bool yes = false;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  double millis = 0;
};

struct BenchConfig {
  Family family = Family::kFast;
  double alpha = kDefaultFastAlpha;
  std::string generator = "hard";  // "hard" or "gnp:P"
  std::vector<int> sizes;
  std::uint64_t seed = 1;
};

std::vector<BenchRow> bench(const BenchConfig& config);

}  // namespace fvs::harness
