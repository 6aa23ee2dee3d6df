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

#ifndef HUBCOVER_BENCH_H_
#define HUBCOVER_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hubcover/exact_solver.h"
#include "hubcover/generator.h"
#include "hubcover/rational.h"

namespace hubcover {

// One (instance, algorithm) measurement. cost and optimum are empty when
// infeasible; ratio is empty unless both exist and optimum > 0.
struct BenchRow {
  std::string digest;
  int branches = 0;
  int hubs = 0;
  int tasks = 0;
  Variant variant = Variant::kV1;
  Allocation allocation = Allocation::kMulti;
  std::string algorithm;
  // "infeasible" or "not-applicable" when there is no cost.
  std::string status;
  std::optional<Rational> cost;
  std::optional<Rational> optimum;
  std::optional<Rational> ratio;
  double wall_ms = 0;
};

struct BenchConfig {
  GeneratorSpec spec;
  int count = 10;
  std::uint64_t seed = 1;
  // Any of "exact", "taskwise", "bounded-enum", "greedy-v3".
  std::vector<std::string> algorithms;
  int k = 2;
  SolveOptions solve;
  // Instances solved concurrently; row order never depends on it.
  int workers = 1;
};

// Instance i uses seed + i. Throws Error(kBadSpec) on unknown algorithms.
std::vector<BenchRow> RunBench(const BenchConfig& config);

// Header plus one line per row, columns in BenchRow order (status folded
// into the cost column).
std::string BenchCsv(const std::vector<BenchRow>& rows,
                     bool include_wall_time = true);

}  // namespace hubcover

#endif  // HUBCOVER_BENCH_H_
