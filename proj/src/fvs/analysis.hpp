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

#include <span>
#include <string>
#include <vector>

#include "fvs/instance.hpp"
#include "fvs/rule_table.hpp"

namespace fvs::analysis {

struct BranchingVector {
  std::string rule;
  GuideType params;
  std::vector<rules::Drop> symbolic;  // one per leaf of the expanded branch tree
  std::vector<double> drops;          // symbolic evaluated at alpha
  std::vector<std::string> paths;
};

// Expands a fast-family rule on an abstract guide of the given type. Throws
// kRuleTable if the type does not match the rule's pattern.
BranchingVector expand_rule(rules::BranchRule rule, const GuideType& params, double alpha);

// The single branching rule of the simple family on a vertex of U-degree f.
BranchingVector expand_simple(int f, double alpha);

// The unique x >= 1 with sum_i x^(-drops_i) = 1. Throws on a non-positive drop.
double root(std::span<const double> drops);

// Admissible guide types with f <= max_f, s <= max_s, d <= max_d.
std::vector<GuideType> admissible_types(int max_f, int max_s, int max_d);

struct AlphaReport {
  Family family = Family::kFast;
  double alpha = 0;
  double beta = 0;           // largest branching number over all vectors
  double disjoint_base = 0;  // beta^(1+alpha): Disjoint-FVS cost per unit of k
  double exponent_base = 0;  // 1 + beta^(1+alpha): FVS cost after compression
  std::string worst_rule;
  GuideType worst_params;
  std::vector<BranchingVector> vectors;  // each rule at its minimum parameters
};

// Horizon for instantiating at-least patterns.
inline constexpr int kHorizonF = 8;
inline constexpr int kHorizonSD = 5;

AlphaReport analyze(double alpha, Family family);

struct SweepReport {
  std::vector<AlphaReport> table;
  AlphaReport best;
};

SweepReport sweep(Family family, double lo, double hi, double step);

}  // namespace fvs::analysis
