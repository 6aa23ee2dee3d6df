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

#ifndef HUBCOVER_ERROR_H_
#define HUBCOVER_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hubcover {

enum class ErrorCode {
  // Instance construction.
  kNonMetric,
  kNonPositiveCost,
  kGeometryVariantMismatch,
  kUncoveredBranchSA,
  kBadCapacity,
  kInvalidInput,
  // Algorithms.
  kWrongVariant,
  kWrongSetting,
  kWitnessMismatch,
  kLimitExceeded,
  kInfeasible,
  kUncoverableElement,
  kInvalidBoard,
  kUnliftableWitness,
  // Files and generators.
  kSyntax,
  kSemantic,
  kBadSpec,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const { return code_; }
  // 1-based source line for kSyntax/kSemantic errors raised by parsers, else 0.
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace hubcover

#endif  // HUBCOVER_ERROR_H_
