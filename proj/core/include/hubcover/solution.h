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

#ifndef HUBCOVER_SOLUTION_H_
#define HUBCOVER_SOLUTION_H_

#include <compare>
#include <map>
#include <variant>
#include <vector>

#include "hubcover/instance.h"
#include "hubcover/rational.h"

namespace hubcover {

// b -> h -> h2 -> b2. A single-hub tour has h == h2.
struct Tour {
  int b = 0;
  int h = 0;
  int h2 = 0;
  int b2 = 0;

  bool single_hub() const { return h == h2; }
  auto operator<=>(const Tour&) const = default;
};

// Multi allocation: one tour per task.
struct MultiWitness {
  std::map<Task, Tour> tours;
  bool operator==(const MultiWitness&) const = default;
};

// Single allocation: every branch is allocated to one hub.
struct SingleWitness {
  std::map<int, int> hub_of_branch;
  bool operator==(const SingleWitness&) const = default;
};

// Variant 3: every branch is covered by one adjacent open hub.
struct CoverWitness {
  std::map<int, int> hub_of_branch;
  bool operator==(const CoverWitness&) const = default;
};

using Witness = std::variant<MultiWitness, SingleWitness, CoverWitness>;

// The witness shape that verification expects for `instance`.
enum class WitnessKind { kMulti, kSingle, kCover };
WitnessKind ExpectedWitnessKind(const HcpInstance& instance);
WitnessKind KindOf(const Witness& witness);
Witness EmptyWitnessFor(const HcpInstance& instance);

// Open hubs plus witness. The cost is always recomputed from the instance's
// opening costs, never supplied by the caller.
class Solution {
 public:
  // Sorts and deduplicates `open_hubs`. Throws Error(kInvalidInput) when a hub
  // or branch index is out of range.
  static Solution Make(const HcpInstance& instance, std::vector<int> open_hubs,
                       Witness witness);

  const std::vector<int>& open_hubs() const { return open_hubs_; }
  bool IsOpen(int hub) const;
  const Witness& witness() const { return witness_; }
  const Rational& cost() const { return cost_; }

  bool operator==(const Solution&) const = default;

 private:
  Solution() = default;

  std::vector<int> open_hubs_;
  Witness witness_;
  Rational cost_;
};

Rational OpeningCost(const HcpInstance& instance, const std::vector<int>& hubs);

}  // namespace hubcover

#endif  // HUBCOVER_SOLUTION_H_
