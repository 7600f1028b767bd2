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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fvs/error.hpp"
#include "fvs/instance.hpp"

// Machine-readable description of the guide-type branching rules of the fast
// algorithm. The solver executes these programs on real instances and the
// complexity analyzer executes the very same programs on an abstract model of
// the guide's subtree.
namespace fvs::rules {

enum class BranchRule : std::uint8_t {
  k4_0_0,  // (>=4,0,0)
  k1_1_0,  // (1,1,0)
  k2_1_0,  // (>=2,>=1,>=0)
  k2_0_1,  // (>=2,>=0,>=1)
  k1_0_1,  // (1,0,1)
  k1_2_0,  // (1,>=2,>=0)
  k1_1_1,  // (1,>=1,>=1)
  k1_0_2,  // (1,>=0,>=2)
  k0_1_1,  // (0,1,1)
  k0_0_2,  // (0,0,2)
  k0_3_0,  // (0,>=3,>=0)
  k0_2_1,  // (0,>=2,>=1)
  k0_1_2,  // (0,>=1,>=2)
  k0_0_3,  // (0,>=0,>=3)
};

inline constexpr std::size_t kBranchRuleCount = 14;

struct Bound {
  int value = 0;
  bool at_least = false;

  bool matches(int x) const { return at_least ? x >= value : x == value; }
};

struct Pattern {
  Bound f, s, d;

  bool matches(const GuideType& t) const {
    return f.matches(t.f) && s.matches(t.s) && d.matches(t.d);
  }
  GuideType minimum() const { return {f.value, s.value, d.value}; }
};

// Named vertices a rule refers to. Each rule invocation has its own frame.
enum class Role : std::uint8_t { kGuide, kW, kW1, kW2, kDouble };
inline constexpr std::size_t kRoleCount = 5;

enum class Select : std::uint8_t { kSingleChild, kDoubleChild, kChildOf };

struct Step;
using Program = std::shared_ptr<const Step>;

struct Step {
  enum class Kind : std::uint8_t {
    kDone,
    kBind,        // bind = select(source, index)
    kBranch,      // elementary branch: delete (k-1) / fix (move to U)
    kMoveToU,     // degree-2 rule, vertex with a U-neighbour
    kDissolve,    // degree-2 rule, vertex without U-neighbours: contract
    kMakeTent,    // subdivision rule on a D-leaf of U-degree 2
    kExpectTent,  // the operand has just become a tent
    kCall,        // run another rule with the operand as its guide
  };

  Kind kind = Kind::kDone;
  Role target = Role::kGuide;
  Role bind = Role::kGuide;
  Select select = Select::kSingleChild;
  int index = 0;
  BranchRule callee = BranchRule::k4_0_0;
  Program next;
  Program on_delete;
  Program on_fix;
};

struct RuleSpec {
  BranchRule id;
  const char* name;
  Pattern pattern;
  Program program;
};

// Rules in dispatch order; the first matching pattern wins.
const std::vector<RuleSpec>& rule_table();
const RuleSpec& rule(BranchRule id);
std::optional<BranchRule> dispatch(const GuideType& t);

// Measure drop lower bound, linear in alpha.
struct Drop {
  double constant = 0;
  double alpha_coeff = 0;

  double at(double alpha) const { return constant + alpha_coeff * alpha; }
  Drop& operator+=(const Drop& o) {
    constant += o.constant;
    alpha_coeff += o.alpha_coeff;
    return *this;
  }
};

std::string to_string(const Drop& d);

// Drops granted per elementary operation.
inline Drop delete_drop() { return {1, 0}; }
inline Drop fix_drop(int u_degree) { return {0, static_cast<double>(u_degree - 1)}; }
inline Drop subdivision_drop() { return {1, -1}; }
inline Drop tent_drop() { return {1, 0}; }

// Executes rule programs against a backend providing:
//   Handle, State
//   Handle select(const State&, Select, Handle source, int index)
//   GuideType guide_type(const State&, Handle)
//   int u_degree(const State&, Handle)
//   std::pair<State, State> branch(const State&, Handle)   // {delete, fix}
//   void move_to_u(State&, Handle)
//   void dissolve(State&, Handle)
//   void make_tent(State&, Handle)
//   void expect_tent(const State&, Handle)
template <class Backend>
class Interpreter {
 public:
  using Handle = typename Backend::Handle;
  using State = typename Backend::State;

  struct Leaf {
    State state;
    Drop drop;
    std::string path;  // D/F per elementary branch taken
  };

  explicit Interpreter(Backend& backend) : backend_(backend) {}

  std::vector<Leaf> run(BranchRule id, const State& state, Handle guide) {
    std::vector<Leaf> out;
    Frame frame{};
    frame[index(Role::kGuide)] = guide;
    check_type(id, state, guide);
    exec(rule(id).program.get(), state, frame, Drop{}, std::string{}, {}, out);
    return out;
  }

 private:
  using Frame = std::array<std::optional<Handle>, kRoleCount>;
  struct Continuation {
    const Step* next;
    Frame frame;
  };

  static std::size_t index(Role r) { return static_cast<std::size_t>(r); }

  static Handle get(const Frame& frame, Role r) {
    if (!frame[index(r)]) fail(ErrorCode::kRuleTable, "rule reads an unbound role");
    return *frame[index(r)];
  }

  void check_type(BranchRule id, const State& state, Handle guide) {
    const GuideType t = backend_.guide_type(state, guide);
    if (!rule(id).pattern.matches(t)) {
      fail(ErrorCode::kRuleTable, std::string("guide of type ") + to_string(t) +
                                      " does not match rule " + rule(id).name);
    }
  }

  void exec(const Step* step, State state, Frame frame, Drop drop, std::string path,
            std::vector<Continuation> stack, std::vector<Leaf>& out) {
    using Kind = Step::Kind;
    for (;;) {
      switch (step->kind) {
        case Kind::kDone:
          if (stack.empty()) {
            out.push_back(Leaf{std::move(state), drop, std::move(path)});
            return;
          }
          step = stack.back().next;
          frame = stack.back().frame;
          stack.pop_back();
          continue;
        case Kind::kBind: {
          const Handle source = get(frame, step->target);
          frame[index(step->bind)] = backend_.select(state, step->select, source, step->index);
          step = step->next.get();
          continue;
        }
        case Kind::kBranch: {
          const Handle x = get(frame, step->target);
          const int f = backend_.u_degree(state, x);
          auto [deleted, fixed] = backend_.branch(state, x);
          Drop d = drop;
          d += delete_drop();
          exec(step->on_delete.get(), std::move(deleted), frame, d, path + "D", stack, out);
          d = drop;
          d += fix_drop(f);
          exec(step->on_fix.get(), std::move(fixed), frame, d, path + "F", stack, out);
          return;
        }
        case Kind::kMoveToU:
          backend_.move_to_u(state, get(frame, step->target));
          step = step->next.get();
          continue;
        case Kind::kDissolve:
          backend_.dissolve(state, get(frame, step->target));
          step = step->next.get();
          continue;
        case Kind::kMakeTent:
          backend_.make_tent(state, get(frame, step->target));
          drop += subdivision_drop();
          step = step->next.get();
          continue;
        case Kind::kExpectTent:
          backend_.expect_tent(state, get(frame, step->target));
          drop += tent_drop();
          step = step->next.get();
          continue;
        case Kind::kCall: {
          const Handle guide = get(frame, step->target);
          check_type(step->callee, state, guide);
          stack.push_back(Continuation{step->next.get(), frame});
          frame = Frame{};
          frame[index(Role::kGuide)] = guide;
          step = rule(step->callee).program.get();
          continue;
        }
      }
    }
  }

  Backend& backend_;
};

}  // namespace fvs::rules
