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

#include "fvs/rule_table.hpp"

#include <cstdio>

namespace fvs::rules {

namespace {

using Kind = Step::Kind;

Program make(Step s) { return std::make_shared<const Step>(std::move(s)); }

Program done() { return make(Step{}); }

Program bind(Role as, Select sel, Role source, int index, Program next) {
  Step s;
  s.kind = Kind::kBind;
  s.bind = as;
  s.select = sel;
  s.target = source;
  s.index = index;
  s.next = std::move(next);
  return make(std::move(s));
}

Program branch(Role target, Program on_delete, Program on_fix) {
  Step s;
  s.kind = Kind::kBranch;
  s.target = target;
  s.on_delete = std::move(on_delete);
  s.on_fix = std::move(on_fix);
  return make(std::move(s));
}

Program op(Kind kind, Role target, Program next = done()) {
  Step s;
  s.kind = kind;
  s.target = target;
  s.next = std::move(next);
  return make(std::move(s));
}

Program call(BranchRule callee, Role guide = Role::kGuide, Program next = done()) {
  Step s;
  s.kind = Kind::kCall;
  s.callee = callee;
  s.target = guide;
  s.next = std::move(next);
  return make(std::move(s));
}

// Eliminate a double child u of the guide: branch on u's first child w1. On
// delete, u drops to degree 2 and is dissolved, leaving the guide one more
// single. On fix, u is a (1,1,0)-guide and that rule runs; afterwards the
// guide has one more U-neighbour.
Program eliminate_double(Program after_delete, Program after_rest) {
  return bind(Role::kDouble, Select::kDoubleChild, Role::kGuide, 0,
              bind(Role::kW1, Select::kChildOf, Role::kDouble, 0,
                   branch(Role::kW1, op(Kind::kDissolve, Role::kDouble, std::move(after_delete)),
                          call(BranchRule::k1_1_0, Role::kDouble, std::move(after_rest)))));
}

Pattern pattern(int f, bool f_min, int s, bool s_min, int d, bool d_min) {
  return Pattern{{f, f_min}, {s, s_min}, {d, d_min}};
}

std::vector<RuleSpec> build() {
  using R = BranchRule;
  std::vector<RuleSpec> t;
  t.push_back({R::k4_0_0, "(>=4,0,0)", pattern(4, true, 0, false, 0, false),
               branch(Role::kGuide, done(), done())});
  t.push_back({R::k1_1_0, "(1,1,0)", pattern(1, false, 1, false, 0, false),
               bind(Role::kW, Select::kSingleChild, Role::kGuide, 0,
                    branch(Role::kW, op(Kind::kMoveToU, Role::kGuide),
                           op(Kind::kMakeTent, Role::kGuide)))});
  t.push_back({R::k2_1_0, "(>=2,>=1,>=0)", pattern(2, true, 1, true, 0, true),
               bind(Role::kW, Select::kSingleChild, Role::kGuide, 0,
                    branch(Role::kGuide, op(Kind::kExpectTent, Role::kW),
                           call(R::k4_0_0, Role::kW)))});
  t.push_back({R::k2_0_1, "(>=2,>=0,>=1)", pattern(2, true, 0, true, 1, true),
               eliminate_double(call(R::k2_1_0), done())});
  t.push_back({R::k1_0_1, "(1,0,1)", pattern(1, false, 0, false, 1, false),
               eliminate_double(call(R::k1_1_0), op(Kind::kMakeTent, Role::kGuide))});
  // The second branch is sometimes called 'remove'. It is read as the fix
  // branch; in the delete branch both singles become tents.
  t.push_back({R::k1_2_0, "(1,>=2,>=0)", pattern(1, false, 2, true, 0, true),
               bind(Role::kW1, Select::kSingleChild, Role::kGuide, 0,
                    bind(Role::kW2, Select::kSingleChild, Role::kGuide, 1,
                         branch(Role::kGuide,
                                op(Kind::kExpectTent, Role::kW1, op(Kind::kExpectTent, Role::kW2)),
                                call(R::k4_0_0, Role::kW1, call(R::k4_0_0, Role::kW2)))))});
  t.push_back({R::k1_1_1, "(1,>=1,>=1)", pattern(1, false, 1, true, 1, true),
               eliminate_double(call(R::k1_2_0), call(R::k2_1_0))});
  t.push_back({R::k1_0_2, "(1,>=0,>=2)", pattern(1, false, 0, true, 2, true),
               eliminate_double(call(R::k1_1_1), call(R::k2_0_1))});
  t.push_back({R::k0_1_1, "(0,1,1)", pattern(0, false, 1, false, 1, false),
               eliminate_double(done(), call(R::k1_1_0))});
  t.push_back({R::k0_0_2, "(0,0,2)", pattern(0, false, 0, false, 2, false),
               eliminate_double(call(R::k0_1_1), call(R::k1_0_1))});
  t.push_back({R::k0_3_0, "(0,>=3,>=0)", pattern(0, false, 3, true, 0, true),
               bind(Role::kW, Select::kSingleChild, Role::kGuide, 0,
                    branch(Role::kW, done(), call(R::k1_2_0)))});
  t.push_back({R::k0_2_1, "(0,>=2,>=1)", pattern(0, false, 2, true, 1, true),
               eliminate_double(call(R::k0_3_0), call(R::k1_2_0))});
  t.push_back({R::k0_1_2, "(0,>=1,>=2)", pattern(0, false, 1, true, 2, true),
               eliminate_double(call(R::k0_2_1), call(R::k1_1_1))});
  t.push_back({R::k0_0_3, "(0,>=0,>=3)", pattern(0, false, 0, true, 3, true),
               eliminate_double(call(R::k0_1_2), call(R::k1_0_2))});
  return t;
}

}  // namespace

const std::vector<RuleSpec>& rule_table() {
  static const std::vector<RuleSpec> table = build();
  return table;
}

const RuleSpec& rule(BranchRule id) {
  for (const RuleSpec& r : rule_table()) {
    if (r.id == id) return r;
  }
  fail(ErrorCode::kRuleTable, "unknown branching rule");
}

std::optional<BranchRule> dispatch(const GuideType& t) {
  for (const RuleSpec& r : rule_table()) {
    if (r.pattern.matches(t)) return r.id;
  }
  return std::nullopt;
}

std::string to_string(const Drop& d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g%+g*a", d.constant, d.alpha_coeff);
  return buf;
}

}  // namespace fvs::rules
