// Copyright 2026 The Cyber Alliance Game Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cag/error.hpp"

namespace cag {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyGame: return "EmptyGame";
    case ErrorCode::kQuotaTooLow: return "QuotaTooLow";
    case ErrorCode::kQuotaTooHigh: return "QuotaTooHigh";
    case ErrorCode::kNonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kTooManyPlayers: return "TooManyPlayers";
    case ErrorCode::kWeightBudgetExceeded: return "WeightBudgetExceeded";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kMalformedTree: return "MalformedTree";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kInvalidContext: return "InvalidContext";
    case ErrorCode::kPostureBandViolation: return "PostureBandViolation";
    case ErrorCode::kEmptyGrid: return "EmptyGrid";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kUnknownPreset: return "UnknownPreset";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace cag
