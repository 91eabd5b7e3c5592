// Copyright 2026 The oberwolfach-construct Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oberwolfach {

enum class ErrorCode {
  DegreeViolation,
  InvalidLength,
  InvalidGraph,
  ShapeMismatch,
  ConstructionFailed,
  WitnessInvalid,
  Infeasible,
  BudgetExceeded,
  GracefulNotFound,
  ExtendFailed,
  InvalidRequest,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::WitnessInvalid: return "WitnessInvalid";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::GracefulNotFound: return "GracefulNotFound";
    case ErrorCode::ExtendFailed: return "ExtendFailed";
    case ErrorCode::InvalidRequest: return "InvalidRequest";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit status) can tell them apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oberwolfach
