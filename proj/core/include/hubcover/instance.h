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

#ifndef HUBCOVER_INSTANCE_H_
#define HUBCOVER_INSTANCE_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hubcover/rational.h"

namespace hubcover {

enum class Variant { kV1 = 1, kV2 = 2, kV3 = 3 };
enum class Allocation { kSingle, kMulti };

std::string_view VariantName(Variant variant);        // "v1", "v2", "v3"
std::string_view AllocationName(Allocation allocation);  // "single", "multi"

// A delivery task: an ordered branch pair (from, to). from == to is allowed
// and asks for a round trip through one or two open hubs.
struct Task {
  int from = 0;
  int to = 0;
  auto operator<=>(const Task&) const = default;
};

// Symmetric distance matrix over V = branches followed by hubs. Vertex u < |B|
// is branch u; vertex |B| + h is hub h.
class MetricMatrix {
 public:
  explicit MetricMatrix(int vertex_count = 0);

  int size() const { return size_; }
  const Rational& at(int u, int v) const { return values_[u * size_ + v]; }
  // Writes both (u, v) and (v, u).
  void Set(int u, int v, const Rational& value);

  bool operator==(const MetricMatrix&) const = default;

 private:
  int size_;
  std::vector<Rational> values_;
};

// Unweighted undirected graph with branch-hub and hub-hub edges. Used by
// variant 2 (both kinds) and variant 3 (branch-hub only).
class AdjacencyGraph {
 public:
  AdjacencyGraph(int branch_count = 0, int hub_count = 0);

  int branch_count() const { return branch_count_; }
  int hub_count() const { return hub_count_; }

  void AddBranchHubEdge(int branch, int hub);
  // Self loops are ignored; h-h legs are single-hub tours.
  void AddHubHubEdge(int hub, int other);

  bool BranchHub(int branch, int hub) const {
    return branch_hub_[branch * hub_count_ + hub] != 0;
  }
  bool HubHub(int hub, int other) const {
    return hub_hub_[hub * hub_count_ + other] != 0;
  }
  bool HasHubHubEdges() const;
  int BranchHubEdgeCount() const;
  int HubHubEdgeCount() const;

  bool operator==(const AdjacencyGraph&) const = default;

 private:
  int branch_count_;
  int hub_count_;
  std::vector<char> branch_hub_;
  std::vector<char> hub_hub_;
};

using Geometry = std::variant<MetricMatrix, AdjacencyGraph>;

// Unvalidated instance fields. HcpInstance::Build checks every invariant.
struct InstanceData {
  std::vector<std::string> branches;
  std::vector<std::string> hubs;
  std::vector<Rational> opening_costs;
  Geometry geometry;
  std::vector<Task> tasks;
  Rational alpha = 0;
  Rational phi = 0;
  Variant variant = Variant::kV1;
  Allocation allocation = Allocation::kMulti;
  std::optional<int> capacity;

  bool operator==(const InstanceData&) const = default;
};

// One validated Hub Covering Problem instance. Immutable once built.
//
// Invariants:
//  - opening costs are positive;
//  - V1 uses a MetricMatrix (zero diagonal, symmetric, nonnegative, exact
//    triangle inequality); V2/V3 use an AdjacencyGraph, V3 without hub-hub
//    edges;
//  - V3 has no tasks; tasks are stored sorted and deduplicated;
//  - for single allocation with a nonempty task set, every branch is part of
//    some task;
//  - 1 <= capacity <= |H| when present; alpha in [0, 1]; phi >= 0.
class HcpInstance {
 public:
  // Throws Error naming the first violated invariant.
  static HcpInstance Build(InstanceData data);

  int branch_count() const { return static_cast<int>(data_.branches.size()); }
  int hub_count() const { return static_cast<int>(data_.hubs.size()); }
  const std::string& branch_name(int b) const { return data_.branches[b]; }
  const std::string& hub_name(int h) const { return data_.hubs[h]; }
  std::optional<int> FindBranch(std::string_view name) const;
  std::optional<int> FindHub(std::string_view name) const;

  const Rational& opening_cost(int h) const { return data_.opening_costs[h]; }
  const std::vector<Rational>& opening_costs() const {
    return data_.opening_costs;
  }
  bool HasUnitCosts() const;

  bool HasMetric() const {
    return std::holds_alternative<MetricMatrix>(data_.geometry);
  }
  const MetricMatrix& metric() const {
    return std::get<MetricMatrix>(data_.geometry);
  }
  const AdjacencyGraph& graph() const {
    return std::get<AdjacencyGraph>(data_.geometry);
  }
  int BranchVertex(int b) const { return b; }
  int HubVertex(int h) const { return branch_count() + h; }

  const std::vector<Task>& tasks() const { return data_.tasks; }
  const Rational& alpha() const { return data_.alpha; }
  const Rational& phi() const { return data_.phi; }
  Variant variant() const { return data_.variant; }
  Allocation allocation() const { return data_.allocation; }
  const std::optional<int>& capacity() const { return data_.capacity; }

  const InstanceData& data() const { return data_; }

  // Informational remarks that are not errors, e.g. alpha outside {0, 1}.
  std::vector<std::string> Notes() const;

  HcpInstance WithCapacity(std::optional<int> capacity) const;
  HcpInstance WithAllocation(Allocation allocation) const;

  bool operator==(const HcpInstance& other) const {
    return data_ == other.data_;
  }

 private:
  explicit HcpInstance(InstanceData data);

  InstanceData data_;
  std::unordered_map<std::string, int> branch_index_;
  std::unordered_map<std::string, int> hub_index_;
};

}  // namespace hubcover

#endif  // HUBCOVER_INSTANCE_H_
