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

#include <benchmark/benchmark.h>

#include "hubcover/approx.h"
#include "hubcover/exact_solver.h"
#include "hubcover/generator.h"
#include "hubcover/hcp_format.h"
#include "hubcover/reductions.h"

namespace hubcover {
namespace {

HcpInstance Instance(Family family, Allocation allocation, int hubs,
                     double phi_quantile = 0.4) {
  GeneratorSpec spec;
  spec.family = family;
  spec.allocation = allocation;
  spec.branches = 6;
  spec.hubs = hubs;
  spec.cost_max = 5;
  spec.phi_quantile = phi_quantile;
  return GenerateInstance(spec, 42);
}

void BM_SolveExactMulti(benchmark::State& state) {
  const HcpInstance in =
      Instance(Family::kRandomGraphV2, Allocation::kMulti, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveExact(in));
}
BENCHMARK(BM_SolveExactMulti)->DenseRange(6, 14, 4);

void BM_SolveExactSingle(benchmark::State& state) {
  const HcpInstance in =
      Instance(Family::kRandomGraphV2, Allocation::kSingle, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveExact(in));
}
BENCHMARK(BM_SolveExactSingle)->DenseRange(6, 14, 4);

void BM_SolveExactWorkers(benchmark::State& state) {
  const HcpInstance in = Instance(Family::kEuclideanV1, Allocation::kMulti, 16);
  SolveOptions options;
  options.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SolveExact(in, options));
}
BENCHMARK(BM_SolveExactWorkers)->Arg(1)->Arg(4)->UseRealTime();

void BM_Taskwise(benchmark::State& state) {
  const HcpInstance in =
      Instance(Family::kEuclideanV1, Allocation::kMulti, static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ApproxTaskwise(in));
}
BENCHMARK(BM_Taskwise)->RangeMultiplier(2)->Range(8, 64);

void BM_GreedySetCover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SetCoverInstance sc = RandomSetCover(n, n / 2, 0.1, 1, 9, 7);
  for (auto _ : state) benchmark::DoNotOptimize(GreedySetCover(sc));
}
BENCHMARK(BM_GreedySetCover)->RangeMultiplier(4)->Range(16, 1024);

void BM_QueensToSa2(benchmark::State& state) {
  const QueensInstance q = RandomQueensInstance(static_cast<int>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(QueensToSa2(q));
}
BENCHMARK(BM_QueensToSa2)->DenseRange(4, 12, 4);

void BM_ParseSerialize(benchmark::State& state) {
  const std::string text =
      SerializeInstance(Instance(Family::kEuclideanV1, Allocation::kMulti, 20));
  for (auto _ : state) benchmark::DoNotOptimize(SerializeInstance(ParseInstance(text)));
}
BENCHMARK(BM_ParseSerialize);

}  // namespace
}  // namespace hubcover

BENCHMARK_MAIN();
