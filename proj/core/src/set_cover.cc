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

#include "hubcover/set_cover.h"

#include <algorithm>
#include <set>
#include <utility>

#include "hubcover/error.h"

namespace hubcover {

SetCoverInstance SetCoverInstance::Build(std::vector<std::string> elements,
                                         std::vector<WeightedSet> sets) {
  std::set<std::string> names;
  for (const auto& name : elements) {
    if (name.empty() || !names.insert(name).second) {
      throw Error(ErrorCode::kInvalidInput,
                  "empty or duplicate element name '" + name + "'");
    }
  }
  std::set<std::string> set_names;
  const int element_count = static_cast<int>(elements.size());
  std::vector<char> covered(element_count, 0);
  for (auto& set : sets) {
    if (set.name.empty() || !set_names.insert(set.name).second) {
      throw Error(ErrorCode::kInvalidInput,
                  "empty or duplicate set name '" + set.name + "'");
    }
    if (set.weight <= 0) {
      throw Error(ErrorCode::kNonPositiveCost,
                  "set " + set.name + " has non-positive weight");
    }
    std::sort(set.members.begin(), set.members.end());
    set.members.erase(std::unique(set.members.begin(), set.members.end()),
                      set.members.end());
    if (set.members.empty()) {
      throw Error(ErrorCode::kInvalidInput,
                  "set " + set.name + " covers no element");
    }
    for (int e : set.members) {
      if (e < 0 || e >= element_count) {
        throw Error(ErrorCode::kInvalidInput,
                    "set " + set.name + " refers to an unknown element");
      }
      covered[e] = 1;
    }
  }
  SetCoverInstance instance;
  instance.elements_ = std::move(elements);
  instance.sets_ = std::move(sets);
  for (int e = 0; e < element_count; ++e) {
    if (!covered[e]) instance.uncoverable_.push_back(e);
  }
  return instance;
}

int SetCoverInstance::MaxSetSize() const {
  std::size_t best = 0;
  for (const auto& set : sets_) best = std::max(best, set.members.size());
  return static_cast<int>(best);
}

Rational SelectionWeight(const SetCoverInstance& instance,
                         const std::vector<int>& sets) {
  Rational total = 0;
  for (int s : sets) total += instance.sets()[s].weight;
  return total;
}

bool IsCover(const SetCoverInstance& instance, const std::vector<int>& sets) {
  std::vector<char> covered(instance.element_count(), 0);
  for (int s : sets) {
    if (s < 0 || s >= instance.set_count()) return false;
    for (int e : instance.sets()[s].members) covered[e] = 1;
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c != 0; });
}

}  // namespace hubcover
