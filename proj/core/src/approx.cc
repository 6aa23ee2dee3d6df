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

#include "hubcover/approx.h"

#include <algorithm>
#include <optional>
#include <string>

#include "hubcover/error.h"
#include "hubcover/exact_solver.h"
#include "hubcover/parallel.h"
#include "hubcover/reductions.h"

namespace hubcover {
namespace {

void RequireMultiAllocationTours(const HcpInstance& instance,
                                 std::string_view algorithm) {
  const std::string name(algorithm);
  if (instance.variant() == Variant::kV3) {
    throw Error(ErrorCode::kWrongSetting,
                name + " targets variants 1 and 2; variant 3 is set cover, "
                       "use the greedy set cover algorithm");
  }
  if (instance.allocation() == Allocation::kSingle) {
    throw Error(ErrorCode::kWrongSetting,
                name + ": single allocation is not supported; use the exact "
                       "solver");
  }
  if (instance.capacity().has_value()) {
    throw Error(ErrorCode::kWrongSetting,
                name + ": capacitated instances are not supported; use the "
                       "exact solver");
  }
}

}  // namespace

Solution ApproxTaskwise(const HcpInstance& instance, int workers) {
  RequireMultiAllocationTours(instance, "task-wise approximation");
  const auto& tasks = instance.tasks();
  std::vector<std::optional<HubPair>> pairs(tasks.size());
  ParallelFor(tasks.size(), workers, [&](std::size_t t) {
    pairs[t] = PerTaskBestPair(instance, tasks[t]);
  });

  MultiWitness witness;
  std::vector<int> open;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (!pairs[t]) {
      throw Error(ErrorCode::kInfeasible,
                  "task (" + instance.branch_name(tasks[t].from) + "," +
                      instance.branch_name(tasks[t].to) +
                      ") has no feasible tour");
    }
    witness.tours[tasks[t]] =
        Tour{tasks[t].from, pairs[t]->h, pairs[t]->h2, tasks[t].to};
    open.push_back(pairs[t]->h);
    open.push_back(pairs[t]->h2);
  }
  return Solution::Make(instance, std::move(open), std::move(witness));
}

Solution ApproxBoundedEnumeration(const HcpInstance& instance, int k) {
  RequireMultiAllocationTours(instance, "bounded enumeration");
  if (!instance.HasUnitCosts()) {
    throw Error(ErrorCode::kWrongSetting,
                "bounded enumeration requires unit opening costs");
  }
  if (k < 1) throw Error(ErrorCode::kWrongSetting, "k must be at least 1");

  const HubSetChecker checker(instance);
  const int hubs = instance.hub_count();
  const int max_size = std::min(k, hubs);
  std::vector<int> combo;
  for (int size = 0; size <= max_size; ++size) {
    // Lexicographic combinations of `size` hubs.
    combo.resize(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      if (auto witness = checker.Find(MaskOf(combo))) {
        return Solution::Make(instance, combo, std::move(*witness));
      }
      int i = size - 1;
      while (i >= 0 && combo[i] == hubs - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  std::vector<int> all(hubs);
  for (int h = 0; h < hubs; ++h) all[h] = h;
  if (auto witness = checker.Find(MaskOf(all))) {
    return Solution::Make(instance, std::move(all), std::move(*witness));
  }
  throw Error(ErrorCode::kInfeasible,
              "no feasible solution even with every hub open");
}

SetCoverResult GreedySetCover(const SetCoverInstance& instance) {
  if (!instance.Coverable()) {
    throw Error(ErrorCode::kUncoverableElement,
                "element " +
                    instance.elements()[instance.uncoverable_elements()[0]] +
                    " is in no set");
  }
  const auto& sets = instance.sets();
  std::vector<char> covered(instance.element_count(), 0);
  std::vector<char> taken(sets.size(), 0);
  int remaining = instance.element_count();
  SetCoverResult result;
  result.weight = 0;
  while (remaining > 0) {
    int best = -1;
    int best_new = 0;
    for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
      if (taken[s]) continue;
      int fresh = 0;
      for (int e : sets[s].members) fresh += covered[e] ? 0 : 1;
      if (fresh == 0) continue;
      if (best < 0) {
        best = s;
        best_new = fresh;
        continue;
      }
      // weight/fresh < best_weight/best_new, cross-multiplied.
      const Rational lhs = sets[s].weight * best_new;
      const Rational rhs = sets[best].weight * fresh;
      if (lhs < rhs || (lhs == rhs && sets[s].weight < sets[best].weight)) {
        best = s;
        best_new = fresh;
      }
    }
    taken[best] = 1;
    result.chosen.push_back(best);
    result.weight += sets[best].weight;
    for (int e : sets[best].members) {
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
    }
  }
  return result;
}

Solution SolveVariant3Greedy(const HcpInstance& instance) {
  if (instance.variant() != Variant::kV3) {
    throw Error(ErrorCode::kWrongSetting,
                "greedy set cover solves variant 3 instances");
  }
  if (instance.capacity().has_value()) {
    throw Error(ErrorCode::kWrongSetting,
                "capacitated variant 3 is not supported; "
                "use the exact solver");
  }
  const ReductionRecord record = V3ToSetCover(instance);
  const auto& cover = std::get<SetCoverInstance>(record.target);
  SetCoverResult greedy;
  try {
    greedy = GreedySetCover(cover);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUncoverableElement) throw;
    throw Error(ErrorCode::kInfeasible,
                std::string("a branch has no adjacent hub: ") + e.what());
  }
  std::vector<int> sets = greedy.chosen;
  std::sort(sets.begin(), sets.end());
  const AnySolution lifted = LiftSolution(record, CoverSelection{sets});
  return std::get<Solution>(lifted);
}

}  // namespace hubcover
