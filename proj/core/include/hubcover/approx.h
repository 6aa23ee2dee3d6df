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

#ifndef HUBCOVER_APPROX_H_
#define HUBCOVER_APPROX_H_

#include <vector>

#include "hubcover/instance.h"
#include "hubcover/rational.h"
#include "hubcover/set_cover.h"
#include "hubcover/solution.h"

namespace hubcover {

// Serves every task with its own cheapest feasible hub pair and opens the
// union. Cost <= sum of per-task optima <= |tasks| * OPT <= |B|^2 * OPT.
//
// Requires multi allocation, variant 1 or 2, no capacity; anything else
// throws Error(kWrongSetting). Throws Error(kInfeasible) if some task has no
// feasible pair even with every hub open.
Solution ApproxTaskwise(const HcpInstance& instance, int workers = 1);

// Unit-cost multi allocation (variant 1 or 2): tries every hub subset of size
// at most k, smallest first, then falls back to opening all hubs. Optimal
// whenever OPT <= k.
Solution ApproxBoundedEnumeration(const HcpInstance& instance, int k);

struct SetCoverResult {
  // In pick order.
  std::vector<int> chosen;
  Rational weight;
};

// Chvatal's greedy: repeatedly takes the set with the smallest weight per
// newly covered element, ties by lower weight then lower index. Weight is at
// most H(d) * OPT with d the largest set size.
// Throws Error(kUncoverableElement).
SetCoverResult GreedySetCover(const SetCoverInstance& instance);

// Variant 3 through its set cover equivalent. Each branch is assigned its
// lowest-index adjacent open hub.
Solution SolveVariant3Greedy(const HcpInstance& instance);

}  // namespace hubcover

#endif  // HUBCOVER_APPROX_H_
