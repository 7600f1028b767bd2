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

#include "fvs/error.hpp"

namespace fvs {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kContractViolation: return "contract-violation";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kSelfLoop: return "self-loop";
    case ErrorCode::kEdgeCountMismatch: return "edge-count-mismatch";
    case ErrorCode::kCapacityExceeded: return "capacity-exceeded";
    case ErrorCode::kInternalState: return "internal-state";
    case ErrorCode::kNoGuide: return "no-guide";
    case ErrorCode::kRuleTable: return "rule-table";
    case ErrorCode::kVerificationFailure: return "verification-failure";
  }
  return "unknown";
}

}  // namespace fvs
