// Copyright 2026 The Authors.
//
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

#include "ordim/error.hpp"

namespace ordim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycle: return "Cycle";
    case ErrorCode::kCountExceeded: return "CountExceeded";
    case ErrorCode::kMalformedCertificate: return "MalformedCertificate";
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kNotMeetIrreducible: return "NotMeetIrreducible";
    case ErrorCode::kParamRange: return "ParamRange";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kTooManyExtensions: return "TooManyExtensions";
    case ErrorCode::kNotDistinguishing: return "NotDistinguishing";
    case ErrorCode::kInvalidRealizer: return "InvalidRealizer";
    case ErrorCode::kMaxTriesExceeded: return "MaxTriesExceeded";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace ordim
