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

#include "hubcover/instance.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "hubcover/error.h"

namespace hubcover {

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kV1: return "v1";
    case Variant::kV2: return "v2";
    case Variant::kV3: return "v3";
  }
  return "?";
}

std::string_view AllocationName(Allocation allocation) {
  return allocation == Allocation::kSingle ? "single" : "multi";
}

MetricMatrix::MetricMatrix(int vertex_count)
    : size_(vertex_count),
      values_(static_cast<std::size_t>(vertex_count) * vertex_count) {}

void MetricMatrix::Set(int u, int v, const Rational& value) {
  values_[u * size_ + v] = value;
  values_[v * size_ + u] = value;
}

AdjacencyGraph::AdjacencyGraph(int branch_count, int hub_count)
    : branch_count_(branch_count),
      hub_count_(hub_count),
      branch_hub_(static_cast<std::size_t>(branch_count) * hub_count, 0),
      hub_hub_(static_cast<std::size_t>(hub_count) * hub_count, 0) {}

void AdjacencyGraph::AddBranchHubEdge(int branch, int hub) {
  branch_hub_[branch * hub_count_ + hub] = 1;
}

void AdjacencyGraph::AddHubHubEdge(int hub, int other) {
  if (hub == other) return;
  hub_hub_[hub * hub_count_ + other] = 1;
  hub_hub_[other * hub_count_ + hub] = 1;
}

bool AdjacencyGraph::HasHubHubEdges() const {
  return std::find(hub_hub_.begin(), hub_hub_.end(), 1) != hub_hub_.end();
}

int AdjacencyGraph::BranchHubEdgeCount() const {
  return static_cast<int>(
      std::count(branch_hub_.begin(), branch_hub_.end(), 1));
}

int AdjacencyGraph::HubHubEdgeCount() const {
  return static_cast<int>(std::count(hub_hub_.begin(), hub_hub_.end(), 1)) /
         2;
}

namespace {

[[noreturn]] void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

void CheckName(const std::string& name, std::string_view what) {
  if (name.empty()) Fail(ErrorCode::kInvalidInput, std::string(what) + " with empty name");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
      Fail(ErrorCode::kInvalidInput,
           std::string(what) + " name '" + name +
               "' contains whitespace or '#'");
    }
  }
}

std::string VertexName(const InstanceData& data, int v) {
  const int branches = static_cast<int>(data.branches.size());
  return v < branches ? data.branches[v] : data.hubs[v - branches];
}

void CheckMetric(const InstanceData& data, const MetricMatrix& metric) {
  const int n = metric.size();
  for (int u = 0; u < n; ++u) {
    if (metric.at(u, u) != 0) {
      Fail(ErrorCode::kNonMetric,
           "d(" + VertexName(data, u) + "," + VertexName(data, u) + ") != 0");
    }
    for (int v = u + 1; v < n; ++v) {
      if (metric.at(u, v) < 0) {
        Fail(ErrorCode::kNonMetric, "negative distance d(" +
                                        VertexName(data, u) + "," +
                                        VertexName(data, v) + ")");
      }
      if (metric.at(u, v) != metric.at(v, u)) {
        Fail(ErrorCode::kNonMetric, "asymmetric distance d(" +
                                        VertexName(data, u) + "," +
                                        VertexName(data, v) + ")");
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (metric.at(u, v) > metric.at(u, w) + metric.at(w, v)) {
          Fail(ErrorCode::kNonMetric,
               "triangle inequality fails: d(" + VertexName(data, u) + "," +
                   VertexName(data, v) + ") > d(" + VertexName(data, u) + "," +
                   VertexName(data, w) + ") + d(" + VertexName(data, w) +
                   "," + VertexName(data, v) + ")");
        }
      }
    }
  }
}

}  // namespace

HcpInstance::HcpInstance(InstanceData data) : data_(std::move(data)) {
  for (int b = 0; b < branch_count(); ++b) branch_index_[data_.branches[b]] = b;
  for (int h = 0; h < hub_count(); ++h) hub_index_[data_.hubs[h]] = h;
}

HcpInstance HcpInstance::Build(InstanceData data) {
  const int branches = static_cast<int>(data.branches.size());
  const int hubs = static_cast<int>(data.hubs.size());

  if (static_cast<int>(data.opening_costs.size()) != hubs) {
    Fail(ErrorCode::kInvalidInput, "one opening cost per hub required");
  }
  {
    std::vector<std::string> names;
    for (const auto& name : data.branches) {
      CheckName(name, "branch");
      names.push_back(name);
    }
    for (const auto& name : data.hubs) {
      CheckName(name, "hub");
      names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    const auto dup = std::adjacent_find(names.begin(), names.end());
    if (dup != names.end()) {
      Fail(ErrorCode::kInvalidInput, "duplicate vertex name '" + *dup + "'");
    }
  }

  for (int h = 0; h < hubs; ++h) {
    if (data.opening_costs[h] <= 0) {
      Fail(ErrorCode::kNonPositiveCost,
           "hub " + data.hubs[h] + " has cost " +
               FormatRational(data.opening_costs[h]));
    }
  }

  if (data.variant == Variant::kV1) {
    const auto* metric = std::get_if<MetricMatrix>(&data.geometry);
    if (metric == nullptr) {
      Fail(ErrorCode::kGeometryVariantMismatch,
           "variant 1 requires a distance matrix");
    }
    if (metric->size() != branches + hubs) {
      Fail(ErrorCode::kInvalidInput, "distance matrix size does not match |B|+|H|");
    }
  } else {
    const auto* graph = std::get_if<AdjacencyGraph>(&data.geometry);
    if (graph == nullptr) {
      Fail(ErrorCode::kGeometryVariantMismatch,
           std::string("variant ") + std::string(VariantName(data.variant)) +
               " requires an adjacency graph");
    }
    if (graph->branch_count() != branches || graph->hub_count() != hubs) {
      Fail(ErrorCode::kInvalidInput, "graph size does not match |B| and |H|");
    }
    if (data.variant == Variant::kV3 && graph->HasHubHubEdges()) {
      Fail(ErrorCode::kGeometryVariantMismatch,
           "variant 3 graphs are bipartite; hub-hub edge present");
    }
  }
  if (const auto* metric = std::get_if<MetricMatrix>(&data.geometry)) {
    CheckMetric(data, *metric);
  }

  if (data.alpha < 0 || data.alpha > 1) {
    Fail(ErrorCode::kInvalidInput,
         "alpha " + FormatRational(data.alpha) + " outside [0,1]");
  }
  if (data.phi < 0) {
    Fail(ErrorCode::kInvalidInput, "phi must be nonnegative");
  }

  for (const Task& task : data.tasks) {
    if (task.from < 0 || task.from >= branches || task.to < 0 ||
        task.to >= branches) {
      Fail(ErrorCode::kInvalidInput, "task refers to an unknown branch");
    }
  }
  if (data.variant == Variant::kV3 && !data.tasks.empty()) {
    Fail(ErrorCode::kInvalidInput, "variant 3 instances carry no tasks");
  }
  std::sort(data.tasks.begin(), data.tasks.end());
  data.tasks.erase(std::unique(data.tasks.begin(), data.tasks.end()),
                   data.tasks.end());

  if (data.variant != Variant::kV3 &&
      data.allocation == Allocation::kSingle && !data.tasks.empty()) {
    std::vector<char> seen(branches, 0);
    for (const Task& task : data.tasks) seen[task.from] = seen[task.to] = 1;
    for (int b = 0; b < branches; ++b) {
      if (!seen[b]) {
        Fail(ErrorCode::kUncoveredBranchSA,
             "branch " + data.branches[b] + " is part of no task");
      }
    }
  }

  if (data.capacity.has_value() &&
      (*data.capacity < 1 || *data.capacity > hubs)) {
    Fail(ErrorCode::kBadCapacity, "capacity " + std::to_string(*data.capacity) +
                                      " outside [1, " + std::to_string(hubs) +
                                      "]");
  }

  return HcpInstance(std::move(data));
}

std::optional<int> HcpInstance::FindBranch(std::string_view name) const {
  const auto it = branch_index_.find(std::string(name));
  if (it == branch_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> HcpInstance::FindHub(std::string_view name) const {
  const auto it = hub_index_.find(std::string(name));
  if (it == hub_index_.end()) return std::nullopt;
  return it->second;
}

bool HcpInstance::HasUnitCosts() const {
  return std::all_of(data_.opening_costs.begin(), data_.opening_costs.end(),
                     [](const Rational& c) { return c == 1; });
}

std::vector<std::string> HcpInstance::Notes() const {
  std::vector<std::string> notes;
  if (data_.alpha != 0 && data_.alpha != 1) {
    notes.push_back("alpha = " + FormatRational(data_.alpha) +
                    " is outside {0, 1}; accepted as a fractional discount");
  }
  return notes;
}

HcpInstance HcpInstance::WithCapacity(std::optional<int> capacity) const {
  InstanceData data = data_;
  data.capacity = capacity;
  return Build(std::move(data));
}

HcpInstance HcpInstance::WithAllocation(Allocation allocation) const {
  InstanceData data = data_;
  data.allocation = allocation;
  return Build(std::move(data));
}

}  // namespace hubcover
