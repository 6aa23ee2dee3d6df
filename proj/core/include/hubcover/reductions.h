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

#ifndef HUBCOVER_REDUCTIONS_H_
#define HUBCOVER_REDUCTIONS_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hubcover/instance.h"
#include "hubcover/queens.h"
#include "hubcover/set_cover.h"
#include "hubcover/solution.h"

namespace hubcover {

enum class ReductionKind {
  kV2ToV1,
  kV3ToV2,
  kSetCoverToV3,
  kV3ToSetCover,
  kQueensToSa2,
};

std::string_view ReductionKindName(ReductionKind kind);
std::optional<ReductionKind> ParseReductionKind(std::string_view name);

using SourceProblem = std::variant<HcpInstance, SetCoverInstance, QueensInstance>;
using TargetProblem = std::variant<HcpInstance, SetCoverInstance>;

// Everything needed to map a target solution back to the source problem.
//
// branch_map is indexed by target branch (or set cover element) and holds the
// source branch, element, or 1-based queens row. hub_map is indexed by target
// hub (or set) and holds the source hub or set; for kQueensToSa2 it holds the
// 0-based square index (row - 1) * n + (col - 1).
struct ReductionRecord {
  ReductionKind kind = ReductionKind::kV2ToV1;
  std::string source_digest;
  SourceProblem source;
  TargetProblem target;
  std::vector<int> branch_map;
  std::vector<int> hub_map;
  // kV3ToV2 only.
  std::optional<int> b0;

  const HcpInstance& target_instance() const {
    return std::get<HcpInstance>(target);
  }
};

// Weight 1 for every source edge and 2 for every other vertex pair, alpha =
// 1/2, phi = 11/4. When the source alpha is zero the hub-hub leg is
// unconstrained there, so every hub pair gets weight 1.
ReductionRecord ReduceV2ToV1(const HcpInstance& source);

// Adds every hub-hub edge, sets alpha = 0 and tasks {(b, b0) : b in B}.
// `b0` defaults to branch 0.
ReductionRecord ReduceV3ToV2(const HcpInstance& source,
                             std::optional<int> b0 = std::nullopt,
                             Allocation allocation = Allocation::kSingle);

// Element j -> branch j, set i -> hub i with cost = weight, membership ->
// adjacency. Element and set names must be distinct.
ReductionRecord SetCoverToV3(const SetCoverInstance& source);

// Inverse of SetCoverToV3. Hubs without any edge have no set counterpart and
// are dropped (they can never help to cover a branch).
ReductionRecord V3ToSetCover(const HcpInstance& source);

// One branch per row, one unit-cost hub per square, a task for every pair of
// distinct rows, hub-hub edges between non-attacking squares, and
// branch-hub edges from a free row to all its squares or from a fixed row to
// its queen's square only. Single allocation, variant 2, alpha = 1.
ReductionRecord QueensToSa2(const QueensInstance& source);

// Hub naming used by QueensToSa2: column letters then row, "c3" or "aa12".
std::string SquareName(Square square);

// Backtracking over free rows with column and diagonal conflict sets.
std::optional<QueensPlacement> SolveQueensCompletion(
    const QueensInstance& instance);

using AnySolution = std::variant<Solution, CoverSelection, QueensPlacement>;

// Maps a feasible target solution back to the source. Throws
// Error(kUnliftableWitness) if the target solution is infeasible or the lifted
// result fails verification on the source.
AnySolution LiftSolution(const ReductionRecord& record,
                         const AnySolution& target_solution);

}  // namespace hubcover

#endif  // HUBCOVER_REDUCTIONS_H_
