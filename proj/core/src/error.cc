// Copyright 2026 The hubcover Authors
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

#include "hubcover/error.h"

namespace hubcover {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonMetric: return "NonMetric";
    case ErrorCode::kNonPositiveCost: return "NonPositiveCost";
    case ErrorCode::kGeometryVariantMismatch: return "GeometryVariantMismatch";
    case ErrorCode::kUncoveredBranchSA: return "UncoveredBranchSA";
    case ErrorCode::kBadCapacity: return "BadCapacity";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kWrongVariant: return "WrongVariant";
    case ErrorCode::kWrongSetting: return "WrongSetting";
    case ErrorCode::kWitnessMismatch: return "WitnessMismatch";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUncoverableElement: return "UncoverableElement";
    case ErrorCode::kInvalidBoard: return "InvalidBoard";
    case ErrorCode::kUnliftableWitness: return "UnliftableWitness";
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kSemantic: return "SemanticError";
    case ErrorCode::kBadSpec: return "BadSpec";
  }
  return "Unknown";
}

namespace {

std::string Decorate(ErrorCode code, const std::string& message, int line) {
  std::string out(ErrorCodeName(code));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(Decorate(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace hubcover
