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

#include "hubcover/bench.h"

#include <chrono>
#include <cstdio>
#include <functional>

#include "hubcover/approx.h"
#include "hubcover/error.h"
#include "hubcover/hcp_format.h"
#include "hubcover/parallel.h"

namespace hubcover {
namespace {

using Runner = std::function<Rational(const HcpInstance&, const BenchConfig&)>;

Runner RunnerFor(const std::string& algorithm) {
  if (algorithm == "exact") {
    return [](const HcpInstance& instance, const BenchConfig& config) {
      const OptimalResult result = SolveExact(instance, config.solve);
      if (result.status == SolveStatus::kInfeasible) {
        throw Error(ErrorCode::kInfeasible, "infeasible");
      }
      return result.optimum;
    };
  }
  if (algorithm == "taskwise") {
    return [](const HcpInstance& instance, const BenchConfig&) {
      return ApproxTaskwise(instance).cost();
    };
  }
  if (algorithm == "bounded-enum") {
    return [](const HcpInstance& instance, const BenchConfig& config) {
      return ApproxBoundedEnumeration(instance, config.k).cost();
    };
  }
  if (algorithm == "greedy-v3") {
    return [](const HcpInstance& instance, const BenchConfig&) {
      return SolveVariant3Greedy(instance).cost();
    };
  }
  throw Error(ErrorCode::kBadSpec,
              "unknown algorithm '" + algorithm +
                  "' (exact, taskwise, bounded-enum, greedy-v3)");
}

std::vector<BenchRow> BenchInstance(const BenchConfig& config,
                                    const std::vector<Runner>& runners,
                                    std::uint64_t seed) {
  const HcpInstance instance = GenerateInstance(config.spec, seed);
  BenchRow base;
  base.digest = ProblemDigest(instance);
  base.branches = instance.branch_count();
  base.hubs = instance.hub_count();
  base.tasks = static_cast<int>(instance.tasks().size());
  base.variant = instance.variant();
  base.allocation = instance.allocation();

  std::optional<Rational> optimum;
  try {
    const OptimalResult result = SolveExact(instance, config.solve);
    if (result.status == SolveStatus::kOptimal) optimum = result.optimum;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kLimitExceeded) throw;
  }

  std::vector<BenchRow> rows;
  for (std::size_t a = 0; a < runners.size(); ++a) {
    BenchRow row = base;
    row.algorithm = config.algorithms[a];
    row.optimum = optimum;
    const auto start = std::chrono::steady_clock::now();
    try {
      row.cost = runners[a](instance, config);
      row.status = "ok";
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::kInfeasible: row.status = "infeasible"; break;
        case ErrorCode::kWrongSetting: row.status = "not-applicable"; break;
        case ErrorCode::kLimitExceeded: row.status = "limit-exceeded"; break;
        default: throw;
      }
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (row.cost && optimum && *optimum > 0) row.ratio = *row.cost / *optimum;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string Cell(const std::optional<Rational>& value) {
  return value ? FormatRational(*value) : std::string();
}

}  // namespace

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  if (config.count < 0) throw Error(ErrorCode::kBadSpec, "count must be >= 0");
  std::vector<Runner> runners;
  for (const auto& name : config.algorithms) runners.push_back(RunnerFor(name));

  std::vector<std::vector<BenchRow>> per_instance(config.count);
  ParallelFor(config.count, config.workers, [&](std::size_t i) {
    per_instance[i] = BenchInstance(config, runners, config.seed + i);
  });
  std::vector<BenchRow> rows;
  for (auto& chunk : per_instance) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

std::string BenchCsv(const std::vector<BenchRow>& rows,
                     bool include_wall_time) {
  std::string out =
      "digest,branches,hubs,tasks,variant,allocation,algorithm,cost,optimum,"
      "ratio";
  out += include_wall_time ? ",wall_ms\n" : "\n";
  for (const BenchRow& row : rows) {
    out += row.digest + "," + std::to_string(row.branches) + "," +
           std::to_string(row.hubs) + "," + std::to_string(row.tasks) + "," +
           std::string(VariantName(row.variant)) + "," +
           std::string(AllocationName(row.allocation)) + "," + row.algorithm +
           "," + (row.cost ? FormatRational(*row.cost) : row.status) + "," +
           Cell(row.optimum) + "," + Cell(row.ratio);
    if (include_wall_time) {
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), ",%.3f", row.wall_ms);
      out += buffer;
    }
    out += "\n";
  }
  return out;
}

}  // namespace hubcover
