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

#include "hubcover/generator.h"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hubcover/error.h"
#include "hubcover/reductions.h"

namespace hubcover {
namespace {

[[noreturn]] void BadSpec(const std::string& message) {
  throw Error(ErrorCode::kBadSpec, message);
}

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    BadSpec(std::string(name) + " must lie in [0, 1]");
  }
}

void CheckSpec(const GeneratorSpec& spec) {
  if (spec.family == Family::kQueensDerived) {
    if (spec.queens_n < 1) BadSpec("queens n must be at least 1");
    if (spec.queens_placed < 0 || spec.queens_placed > spec.queens_n) {
      BadSpec("placed queens must lie in [0, n]");
    }
  } else {
    if (spec.branches < 1) BadSpec("at least one branch is required");
    if (spec.hubs < 1) BadSpec("at least one hub is required");
    if (spec.cost_min < 1 || spec.cost_max < spec.cost_min) {
      BadSpec("cost range must satisfy 1 <= min <= max");
    }
    if (spec.capacity && (*spec.capacity < 1 || *spec.capacity > spec.hubs)) {
      BadSpec("capacity must lie in [1, hubs]");
    }
  }
  CheckProbability(spec.task_density, "task density");
  CheckProbability(spec.edge_probability, "edge probability");
  CheckProbability(spec.phi_quantile, "phi quantile");
  if (spec.alpha < 0 || spec.alpha > 1) BadSpec("alpha must lie in [0, 1]");
  if (spec.phi && *spec.phi < 0) BadSpec("phi must be nonnegative");
  if (spec.grid < 1) BadSpec("grid must be at least 1");
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Coin(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  }

 private:
  std::mt19937_64 rng_;
};

void FillNamesAndCosts(const GeneratorSpec& spec, Draw& draw,
                       InstanceData& data) {
  for (int b = 0; b < spec.branches; ++b) {
    data.branches.push_back("B" + std::to_string(b + 1));
  }
  for (int h = 0; h < spec.hubs; ++h) {
    data.hubs.push_back("H" + std::to_string(h + 1));
    data.opening_costs.emplace_back(draw.Uniform(spec.cost_min, spec.cost_max));
  }
}

std::vector<Task> DrawTasks(int branches, double density, Draw& draw) {
  std::vector<Task> tasks;
  std::vector<char> used(branches, 0);
  for (int b = 0; b < branches; ++b) {
    for (int b2 = 0; b2 < branches; ++b2) {
      if (b != b2 && draw.Coin(density)) {
        tasks.push_back({b, b2});
        used[b] = used[b2] = 1;
      }
    }
  }
  for (int b = 0; b < branches; ++b) {
    if (!used[b]) {
      const int other = branches > 1 ? (b + 1) % branches : b;
      tasks.push_back({b, other});
      used[b] = used[other] = 1;
    }
  }
  return tasks;
}

HcpInstance EuclideanV1(const GeneratorSpec& spec, Draw& draw) {
  InstanceData data;
  data.variant = Variant::kV1;
  data.allocation = spec.allocation;
  data.alpha = spec.alpha;
  data.capacity = spec.capacity;
  FillNamesAndCosts(spec, draw, data);
  const int vertices = spec.branches + spec.hubs;
  std::vector<std::pair<int, int>> points(vertices);
  for (auto& [x, y] : points) {
    x = draw.Uniform(0, spec.grid);
    y = draw.Uniform(0, spec.grid);
  }
  MetricMatrix metric(vertices);
  for (int u = 0; u < vertices; ++u) {
    for (int w = u + 1; w < vertices; ++w) {
      metric.Set(u, w,
                 std::abs(points[u].first - points[w].first) +
                     std::abs(points[u].second - points[w].second));
    }
  }
  data.tasks = DrawTasks(spec.branches, spec.task_density, draw);
  if (spec.phi) {
    data.phi = *spec.phi;
  } else {
    std::vector<Rational> lengths;
    for (const Task& t : data.tasks) {
      for (int h = 0; h < spec.hubs; ++h) {
        const int hv = spec.branches + h;
        lengths.push_back(metric.at(t.from, hv) + metric.at(hv, t.to));
      }
    }
    std::sort(lengths.begin(), lengths.end());
    const auto index = static_cast<std::size_t>(
        spec.phi_quantile * static_cast<double>(lengths.size() - 1) + 0.5);
    data.phi = lengths[std::min(index, lengths.size() - 1)];
  }
  data.geometry = std::move(metric);
  return HcpInstance::Build(std::move(data));
}

HcpInstance GraphInstance(const GeneratorSpec& spec, Draw& draw, Variant variant) {
  InstanceData data;
  data.variant = variant;
  data.capacity = spec.capacity;
  FillNamesAndCosts(spec, draw, data);
  AdjacencyGraph graph(spec.branches, spec.hubs);
  for (int b = 0; b < spec.branches; ++b) {
    for (int h = 0; h < spec.hubs; ++h) {
      if (draw.Coin(spec.edge_probability)) graph.AddBranchHubEdge(b, h);
    }
  }
  if (variant == Variant::kV2) {
    data.allocation = spec.allocation;
    data.alpha = spec.alpha;
    for (int h = 0; h < spec.hubs; ++h) {
      for (int h2 = h + 1; h2 < spec.hubs; ++h2) {
        if (draw.Coin(spec.edge_probability)) graph.AddHubHubEdge(h, h2);
      }
    }
    data.tasks = DrawTasks(spec.branches, spec.task_density, draw);
  } else {
    data.allocation = Allocation::kSingle;
    data.alpha = 0;
  }
  data.geometry = std::move(graph);
  return HcpInstance::Build(std::move(data));
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kEuclideanV1: return "euclidean-v1";
    case Family::kRandomGraphV2: return "random-graph-v2";
    case Family::kBipartiteV3: return "bipartite-v3";
    case Family::kQueensDerived: return "queens-derived";
  }
  return "?";
}

Family ParseFamily(std::string_view name) {
  for (Family f : {Family::kEuclideanV1, Family::kRandomGraphV2,
                   Family::kBipartiteV3, Family::kQueensDerived}) {
    if (FamilyName(f) == name) return f;
  }
  BadSpec("unknown family '" + std::string(name) +
          "' (euclidean-v1, random-graph-v2, bipartite-v3, queens-derived)");
}

HcpInstance GenerateInstance(const GeneratorSpec& spec, std::uint64_t seed) {
  CheckSpec(spec);
  Draw draw(seed);
  switch (spec.family) {
    case Family::kEuclideanV1: return EuclideanV1(spec, draw);
    case Family::kRandomGraphV2: return GraphInstance(spec, draw, Variant::kV2);
    case Family::kBipartiteV3: return GraphInstance(spec, draw, Variant::kV3);
    case Family::kQueensDerived: {
      const QueensInstance board =
          RandomQueensInstance(spec.queens_n, spec.queens_placed, seed);
      HcpInstance target = QueensToSa2(board).target_instance();
      if (spec.capacity) {
        if (*spec.capacity < 1 || *spec.capacity > target.hub_count()) {
          BadSpec("capacity must lie in [1, n*n]");
        }
        return target.WithCapacity(spec.capacity);
      }
      return target;
    }
  }
  BadSpec("unknown family");
}

QueensInstance RandomQueensInstance(int n, int placed, std::uint64_t seed) {
  if (n < 1 || placed < 0 || placed > n) {
    BadSpec("queens instance needs n >= 1 and 0 <= placed <= n");
  }
  Draw draw(seed);
  std::vector<int> rows(n);
  for (int r = 0; r < n; ++r) rows[r] = r + 1;
  for (int i = n - 1; i > 0; --i) std::swap(rows[i], rows[draw.Uniform(0, i)]);
  std::vector<Square> queens;
  for (int r : rows) {
    if (static_cast<int>(queens.size()) == placed) break;
    std::vector<int> safe;
    for (int c = 1; c <= n; ++c) {
      const Square s{r, c};
      if (std::none_of(queens.begin(), queens.end(),
                       [&](const Square& q) { return Attacks(q, s); })) {
        safe.push_back(c);
      }
    }
    if (safe.empty()) continue;
    queens.push_back({r, safe[draw.Uniform(0, static_cast<int>(safe.size()) - 1)]});
  }
  return QueensInstance::Build(n, std::move(queens));
}

SetCoverInstance RandomSetCover(int elements, int sets, double density,
                                int weight_min, int weight_max,
                                std::uint64_t seed) {
  if (elements < 1 || sets < 1) BadSpec("need at least one element and set");
  if (weight_min < 1 || weight_max < weight_min) {
    BadSpec("weight range must satisfy 1 <= min <= max");
  }
  CheckProbability(density, "density");
  Draw draw(seed);
  std::vector<std::vector<int>> members(sets);
  for (int s = 0; s < sets; ++s) {
    for (int e = 0; e < elements; ++e) {
      if (draw.Coin(density)) members[s].push_back(e);
    }
    if (members[s].empty()) members[s].push_back(draw.Uniform(0, elements - 1));
  }
  for (int e = 0; e < elements; ++e) {
    const bool covered = std::any_of(
        members.begin(), members.end(), [&](const std::vector<int>& m) {
          return std::find(m.begin(), m.end(), e) != m.end();
        });
    if (!covered) members[draw.Uniform(0, sets - 1)].push_back(e);
  }
  std::vector<std::string> names;
  for (int e = 0; e < elements; ++e) names.push_back("e" + std::to_string(e + 1));
  std::vector<WeightedSet> weighted;
  for (int s = 0; s < sets; ++s) {
    weighted.push_back({"S" + std::to_string(s + 1),
                        Rational(draw.Uniform(weight_min, weight_max)),
                        std::move(members[s])});
  }
  return SetCoverInstance::Build(std::move(names), std::move(weighted));
}

}  // namespace hubcover
