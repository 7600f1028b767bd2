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

#include <doctest.h>

#include <string>

#include "fvs/analysis.hpp"
#include "fvs/report.hpp"

namespace rep = fvs::report;

TEST_CASE("solve reports round-trip through JSON") {
  rep::SolveReport r;
  r.algorithm = "fast";
  r.alpha = 0.84;
  r.yes = true;
  r.k = 2;
  r.minimum = true;
  r.certificate = {3, 17};
  r.stats.nodes = 12;
  r.stats.leaves = 7;
  r.stats.rule_histogram["R1'"] = 4;
  r.warnings = {"line 2: duplicate edge"};

  const rep::Json j = rep::to_json(r);
  CHECK(j.at("answer") == "YES");
  CHECK(j.contains("version"));
  const auto back = rep::solve_report_from_json(rep::Json::parse(j.dump()));
  CHECK(back.algorithm == r.algorithm);
  CHECK(back.alpha == doctest::Approx(r.alpha));
  CHECK(back.yes == r.yes);
  CHECK(back.k == r.k);
  CHECK(back.minimum == r.minimum);
  CHECK(back.certificate == r.certificate);
  CHECK(back.stats.nodes == r.stats.nodes);
  CHECK(back.stats.leaves == r.stats.leaves);
  CHECK(back.stats.rule_histogram == r.stats.rule_histogram);
  CHECK(back.warnings == r.warnings);
  CHECK(rep::to_json(back) == j);
}

TEST_CASE("text solve report") {
  rep::SolveReport r;
  r.algorithm = "simple";
  r.yes = false;
  r.k = 1;
  const std::string text = rep::to_text(r, false);
  CHECK(text.find("answer: NO") != std::string::npos);
}

TEST_CASE("analysis reports") {
  const auto a = fvs::analysis::analyze(0.84, fvs::Family::kFast);
  const rep::Json j = rep::to_json(a);
  CHECK(j.at("exponent_base").get<double>() == doctest::Approx(a.exponent_base));
  CHECK(j.at("vectors").size() == a.vectors.size());
  CHECK(rep::to_text(a).find("exponent base") != std::string::npos);

  const auto s = fvs::analysis::sweep(fvs::Family::kFast, 0.8, 0.9, 0.05);
  const rep::Json sj = rep::to_json(s);
  CHECK(sj.contains("argmin"));
  CHECK(sj.at("sweep").size() == s.table.size());
}
