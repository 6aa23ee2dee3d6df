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

#ifndef HUBCOVER_SET_COVER_H_
#define HUBCOVER_SET_COVER_H_

#include <string>
#include <vector>

#include "hubcover/rational.h"

namespace hubcover {

struct WeightedSet {
  std::string name;
  Rational weight;
  // Element indices, sorted and unique after SetCoverInstance::Build.
  std::vector<int> members;

  bool operator==(const WeightedSet&) const = default;
};

// Weighted set cover: pick sets of minimum total weight covering every
// element. Every set has positive weight and covers at least one element.
// An element that no set covers does not make the instance invalid; it is
// reported through uncoverable_elements() instead.
class SetCoverInstance {
 public:
  // Throws Error(kInvalidInput) on empty sets, non-positive weights, bad
  // indices or duplicate names.
  static SetCoverInstance Build(std::vector<std::string> elements,
                                std::vector<WeightedSet> sets);

  int element_count() const { return static_cast<int>(elements_.size()); }
  int set_count() const { return static_cast<int>(sets_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<WeightedSet>& sets() const { return sets_; }

  bool Coverable() const { return uncoverable_.empty(); }
  const std::vector<int>& uncoverable_elements() const { return uncoverable_; }
  // Size of the largest set.
  int MaxSetSize() const;

  bool operator==(const SetCoverInstance& other) const {
    return elements_ == other.elements_ && sets_ == other.sets_;
  }

 private:
  SetCoverInstance() = default;

  std::vector<std::string> elements_;
  std::vector<WeightedSet> sets_;
  std::vector<int> uncoverable_;
};

// Chosen set indices, sorted.
struct CoverSelection {
  std::vector<int> sets;
  bool operator==(const CoverSelection&) const = default;
};

Rational SelectionWeight(const SetCoverInstance& instance,
                         const std::vector<int>& sets);
bool IsCover(const SetCoverInstance& instance, const std::vector<int>& sets);

}  // namespace hubcover

#endif  // HUBCOVER_SET_COVER_H_
