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

#ifndef HUBCOVER_FEASIBILITY_H_
#define HUBCOVER_FEASIBILITY_H_

#include <string>
#include <string_view>
#include <vector>

#include "hubcover/instance.h"
#include "hubcover/rational.h"
#include "hubcover/solution.h"

namespace hubcover {

// Violations sort by family in declaration order, then by object key.
enum class ConstraintFamily {
  kTaskCoverage,
  kClosedHubUsed,
  kTourTooLong,
  kMissingEdge,
  kSingleAllocationBroken,
  kCapacityExceeded,
  kBranchUncovered,
};

std::string_view ConstraintFamilyName(ConstraintFamily family);

struct Violation {
  ConstraintFamily family;
  // Index tuple identifying the offending object (task, branch, hub...).
  std::vector<int> key;
  std::string description;

  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(ConstraintFamily family) const;
  std::string ToString() const;
};

// d(b, h) + alpha * d(h, h2) + d(h2, b2). Throws Error(kWrongVariant) unless
// the instance is variant 1.
Rational TourLength(const HcpInstance& instance, const Tour& tour);

// V1: TourLength <= phi. V2: edges b-h and h2-b2 exist, and h == h2, alpha is
// zero, or edge h-h2 exists. Throws Error(kWrongVariant) for V3.
bool TourFeasible(const HcpInstance& instance, const Tour& tour);

// Checks task coverage, open-hub usage, variant thresholds, branch coverage
// (V3) and capacity. Collects every violation. Throws Error(kWitnessMismatch)
// when the witness shape does not fit the instance.
VerificationReport VerifySolution(const HcpInstance& instance,
                                  const Solution& solution);

}  // namespace hubcover

#endif  // HUBCOVER_FEASIBILITY_H_
