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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Each line ends with the measured runtime against its limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "fvs/analysis.hpp"
#include "fvs/harness.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, double limit_seconds, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v = body();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    v.ok = false;
    v.detail += " [over time limit]";
  }
  if (!v.ok) ++failures;
  std::printf("%s criterion %d (%s): %s (%.2fs", v.ok ? "PASS" : "FAIL", id, title, v.detail.c_str(),
              seconds);
  if (limit_seconds > 0) std::printf(" / limit %.0fs", limit_seconds);
  std::printf(")\n");
  std::fflush(stdout);
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Verdict from_suite(const fvs::harness::SuiteResult& s) {
  Verdict v{s.passed && s.failures == 0, s.detail};
  if (!s.samples.empty()) v.detail += "; first failure: " + s.samples.front();
  return v;
}

}  // namespace

int main() {
  namespace an = fvs::analysis;
  namespace hs = fvs::harness;

  report(1, "simple constant", 1.0, [] {
    const auto r = an::analyze(1.0, fvs::Family::kSimple);
    const bool ok = std::abs(r.beta - 1.6180339887) <= 1e-9 && r.exponent_base <= 3.6181;
    return Verdict{ok, fmt("beta %.10f, exponent base %.6f", r.beta, r.exponent_base)};
  });

  report(2, "fast constant and alpha sweep", 60.0, [] {
    const auto r = an::analyze(0.84, fvs::Family::kFast);
    const auto s = an::sweep(fvs::Family::kFast, 0.5, 1.0, 0.005);
    const double limit = 3.592 + 1e-3;
    const bool ok = r.exponent_base <= limit && s.best.alpha >= 0.80 - 1e-9 &&
                    s.best.alpha <= 0.88 + 1e-9 && s.best.exponent_base <= limit;
    return Verdict{ok, fmt("base at 0.84 %.6f, sweep argmin %.3f with base %.6f (worst rule %s)",
                           r.exponent_base, s.best.alpha, s.best.exponent_base,
                           r.worst_rule.c_str())};
  });

  hs::ExactnessResult exact;
  report(3, "solver exactness", 600.0, [&] {
    hs::ExactnessConfig config;
    config.enumerate_up_to = 8;
    config.random_samples = 1000;
    config.random_max_n = 12;
    config.seed = 2026;
    exact = hs::exactness_suite(config);
    return from_suite(exact.exactness);
  });

  report(4, "reduction safeness", 300.0,
         [] { return from_suite(hs::reduction_safeness_suite(10000, 10, 4)); });

  report(5, "measure monotonicity", 0, [&] { return from_suite(exact.measures); });

  report(6, "matroid parity correspondence", 300.0,
         [] { return from_suite(hs::parity_suite(500, 10, 6)); });

  report(7, "NO-bound", 0, [] { return from_suite(hs::nobound_suite(500, 7)); });

  report(8, "empirical scaling", 0, [] {
    return from_suite(hs::scaling_suite(4, 10, 8, 8).suite);
  });

  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
