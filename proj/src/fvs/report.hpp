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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fvs/analysis.hpp"
#include "fvs/harness.hpp"
#include "fvs/solver.hpp"

namespace fvs::report {

using Json = nlohmann::ordered_json;

struct SolveReport {
  std::string algorithm;
  double alpha = 1.0;
  bool yes = false;
  int k = 0;
  bool minimum = false;  // k was searched rather than given
  std::vector<std::int64_t> certificate;  // original vertex names, sorted
  SolveStats stats;
  std::vector<std::string> warnings;
};

Json to_json(const SolveReport& r);
SolveReport solve_report_from_json(const Json& j);
std::string to_text(const SolveReport& r, bool explain);

Json to_json(const analysis::AlphaReport& r);
Json to_json(const analysis::SweepReport& r);
std::string to_text(const analysis::AlphaReport& r);
std::string to_text(const analysis::SweepReport& r);

Json to_json(const std::vector<harness::SuiteResult>& suites);
std::string to_text(const std::vector<harness::SuiteResult>& suites);

Json to_json(const std::vector<harness::BenchRow>& rows, const harness::BenchConfig& config);
std::string to_text(const std::vector<harness::BenchRow>& rows, const harness::BenchConfig& config);

}  // namespace fvs::report
