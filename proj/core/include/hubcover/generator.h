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

#ifndef HUBCOVER_GENERATOR_H_
#define HUBCOVER_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "hubcover/instance.h"
#include "hubcover/queens.h"
#include "hubcover/rational.h"
#include "hubcover/set_cover.h"

namespace hubcover {

enum class Family { kEuclideanV1, kRandomGraphV2, kBipartiteV3, kQueensDerived };

std::string_view FamilyName(Family family);
// Throws Error(kBadSpec).
Family ParseFamily(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kEuclideanV1;
  int branches = 4;
  int hubs = 4;
  // Integer opening costs drawn uniformly from [cost_min, cost_max].
  int cost_min = 1;
  int cost_max = 1;
  // Probability of each ordered pair of distinct branches being a task.
  // Branches left out afterwards get one task so every branch is covered.
  double task_density = 0.5;
  // Edge probability for random-graph-v2 and bipartite-v3.
  double edge_probability = 0.5;
  Rational alpha = 1;
  // euclidean-v1: explicit threshold, otherwise phi is the given quantile of
  // all single-hub tour lengths over the tasks.
  std::optional<Rational> phi;
  double phi_quantile = 0.5;
  // Side of the integer grid for euclidean-v1 points (L1 distances).
  int grid = 10;
  Allocation allocation = Allocation::kMulti;
  std::optional<int> capacity;
  // queens-derived.
  int queens_n = 4;
  int queens_placed = 1;
};

// Deterministic for a fixed (spec, seed). Throws Error(kBadSpec).
HcpInstance GenerateInstance(const GeneratorSpec& spec, std::uint64_t seed);

// Tries to place `placed` non-attacking queens in distinct random rows; a row
// with no safe column is skipped.
QueensInstance RandomQueensInstance(int n, int placed, std::uint64_t seed);

// Every set nonempty, every element covered. Weights uniform integers in
// [weight_min, weight_max].
SetCoverInstance RandomSetCover(int elements, int sets, double density,
                                int weight_min, int weight_max,
                                std::uint64_t seed);

}  // namespace hubcover

#endif  // HUBCOVER_GENERATOR_H_
