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

#include "hubcover/solution.h"

#include <algorithm>
#include <utility>

#include "hubcover/error.h"

namespace hubcover {

WitnessKind ExpectedWitnessKind(const HcpInstance& instance) {
  if (instance.variant() == Variant::kV3) return WitnessKind::kCover;
  return instance.allocation() == Allocation::kMulti ? WitnessKind::kMulti
                                                     : WitnessKind::kSingle;
}

WitnessKind KindOf(const Witness& witness) {
  switch (witness.index()) {
    case 0: return WitnessKind::kMulti;
    case 1: return WitnessKind::kSingle;
    default: return WitnessKind::kCover;
  }
}

Witness EmptyWitnessFor(const HcpInstance& instance) {
  switch (ExpectedWitnessKind(instance)) {
    case WitnessKind::kMulti: return MultiWitness{};
    case WitnessKind::kSingle: return SingleWitness{};
    case WitnessKind::kCover: return CoverWitness{};
  }
  return MultiWitness{};
}

Rational OpeningCost(const HcpInstance& instance,
                     const std::vector<int>& hubs) {
  Rational total = 0;
  for (int h : hubs) total += instance.opening_cost(h);
  return total;
}

namespace {

void CheckAllocation(const HcpInstance& instance,
                     const std::map<int, int>& hub_of_branch) {
  for (const auto& [b, h] : hub_of_branch) {
    if (b < 0 || b >= instance.branch_count() || h < 0 ||
        h >= instance.hub_count()) {
      throw Error(ErrorCode::kInvalidInput, "allocation index out of range");
    }
  }
}

}  // namespace

Solution Solution::Make(const HcpInstance& instance, std::vector<int> open_hubs,
                        Witness witness) {
  std::sort(open_hubs.begin(), open_hubs.end());
  open_hubs.erase(std::unique(open_hubs.begin(), open_hubs.end()),
                  open_hubs.end());
  for (int h : open_hubs) {
    if (h < 0 || h >= instance.hub_count()) {
      throw Error(ErrorCode::kInvalidInput, "open hub index out of range");
    }
  }
  if (const auto* multi = std::get_if<MultiWitness>(&witness)) {
    const int branches = instance.branch_count();
    const int hubs = instance.hub_count();
    for (const auto& [task, tour] : multi->tours) {
      if (task.from < 0 || task.from >= branches || task.to < 0 ||
          task.to >= branches || tour.b < 0 || tour.b >= branches ||
          tour.b2 < 0 || tour.b2 >= branches || tour.h < 0 ||
          tour.h >= hubs || tour.h2 < 0 || tour.h2 >= hubs) {
        throw Error(ErrorCode::kInvalidInput, "tour index out of range");
      }
    }
  } else if (const auto* single = std::get_if<SingleWitness>(&witness)) {
    CheckAllocation(instance, single->hub_of_branch);
  } else {
    CheckAllocation(instance, std::get<CoverWitness>(witness).hub_of_branch);
  }

  Solution solution;
  solution.cost_ = OpeningCost(instance, open_hubs);
  solution.open_hubs_ = std::move(open_hubs);
  solution.witness_ = std::move(witness);
  return solution;
}

bool Solution::IsOpen(int hub) const {
  return std::binary_search(open_hubs_.begin(), open_hubs_.end(), hub);
}

}  // namespace hubcover
