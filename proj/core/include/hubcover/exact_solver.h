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

#ifndef HUBCOVER_EXACT_SOLVER_H_
#define HUBCOVER_EXACT_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hubcover/instance.h"
#include "hubcover/rational.h"
#include "hubcover/solution.h"

namespace hubcover {

// Desk-scale bounds for exhaustive solving. Exceeding them is an error.
struct SolverLimits {
  int max_hubs = 20;
  // Applies to single allocation variants 1 and 2, whose check backtracks
  // over branch allocations.
  int max_branches = 12;

  // Parses "hubs=N,branches=M" (either key may be omitted) on top of the
  // defaults. Throws Error(kBadSpec).
  static SolverLimits Parse(std::string_view text);
  // Defaults overridden by the HUBCOVER_LIMITS environment variable.
  static SolverLimits FromEnvironment();
};

struct SolveOptions {
  SolverLimits limits;
  // Parallel subset evaluation. Results do not depend on this value.
  int workers = 1;
};

using HubMask = std::uint64_t;
inline constexpr int kMaxMaskHubs = 64;

HubMask MaskOf(std::span<const int> hubs);
std::vector<int> HubsOf(HubMask mask);

// Decides whether a fixed set of open hubs admits a witness. Precomputes the
// feasible tours of every task once, so it is cheap to query many subsets.
class HubSetChecker {
 public:
  explicit HubSetChecker(const HcpInstance& instance);

  // MA: per task, the lexicographically first feasible (h, h2) in the set.
  // SA: backtracking over branch allocations, branches by decreasing task
  // degree, hubs by index, with forward checking.
  // V3: every branch gets its lowest-index adjacent hub in the set.
  std::optional<Witness> Find(HubMask mask) const;
  bool Feasible(HubMask mask) const { return Find(mask).has_value(); }

 private:
  std::optional<Witness> FindMulti(HubMask mask) const;
  std::optional<Witness> FindSingle(HubMask mask) const;
  std::optional<Witness> FindCover(HubMask mask) const;
  bool Backtrack(std::size_t depth, std::vector<HubMask>& domains,
                 std::vector<int>& assignment) const;

  const HcpInstance* instance_;
  int hubs_;
  int branches_;
  // Per task, the feasible (h, h2) pairs in lexicographic order.
  std::vector<std::vector<std::pair<int, int>>> task_pairs_;
  // Per branch, hubs allowed by unary constraints (V2 adjacency, self tasks).
  std::vector<HubMask> unary_;
  // compatible_[(b * hubs + h) * branches + c]: hubs of branch c compatible
  // with allocating b to h under every task between b and c.
  std::vector<HubMask> compatible_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<int> branch_order_;
};

// Returns a witness for `hubset` or nullopt.
std::optional<Witness> FeasibleWithHubs(const HcpInstance& instance,
                                        std::span<const int> hubset);

enum class SolveStatus { kOptimal, kInfeasible };

struct OptimalResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Solution> solution;
  // Total opening cost of `solution`; zero when infeasible.
  Rational optimum;
};

// Best-first enumeration of hub subsets ordered by (cost, size, lexicographic
// index order); the first feasible subset is optimal. Honors the capacity.
// Throws Error(kLimitExceeded) beyond `options.limits`.
OptimalResult SolveExact(const HcpInstance& instance,
                         const SolveOptions& options = {});

struct HubPair {
  int h = 0;
  int h2 = 0;
  Rational cost;
};

// Cheapest feasible (h, h2) for one task, a hub counted once when h == h2,
// ties broken lexicographically. Requires MA and variant 1 or 2.
std::optional<HubPair> PerTaskBestPair(const HcpInstance& instance, Task task);

}  // namespace hubcover

#endif  // HUBCOVER_EXACT_SOLVER_H_
