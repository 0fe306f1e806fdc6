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

#ifndef ORDIM_ERROR_HPP_
#define ORDIM_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordim {

enum class ErrorCode {
  kCycle,
  kCountExceeded,
  kMalformedCertificate,
  kAxiomViolation,
  kGroundMismatch,
  kNotMeetIrreducible,
  kParamRange,
  kBudgetExceeded,
  kTooManyExtensions,
  kNotDistinguishing,
  kInvalidRealizer,
  kMaxTriesExceeded,
  kParse,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by exact searches that exhaust their node budget. The bounds are the
// best known when the search stopped.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t lower, std::size_t upper)
      : Error(ErrorCode::kBudgetExceeded, what), lower_(lower), upper_(upper) {}

  std::size_t lower_bound() const { return lower_; }
  std::size_t upper_bound() const { return upper_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
};

}  // namespace ordim

#endif  // ORDIM_ERROR_HPP_
