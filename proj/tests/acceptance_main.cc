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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hubcover/approx.h"
#include "hubcover/bench.h"
#include "hubcover/exact_solver.h"
#include "hubcover/feasibility.h"
#include "hubcover/generator.h"
#include "hubcover/hcp_format.h"
#include "hubcover/reductions.h"
#include "oracles.h"
#include "test_util.h"

namespace hubcover {
namespace {

// Pinned counts and tolerances. All comparisons are exact rationals.
constexpr int kReductionInstances = 500;
constexpr int kRoundTripInstances = 500;
constexpr int kGreedyInstances = 500;
constexpr int kTaskwiseInstancesPerVariant = 200;
constexpr int kBoundedEnumInstances = 100;
constexpr int kQueensInstances = 100;
constexpr int kCapacityInstances = 100;
constexpr int kDeterminismWorkers = 4;
constexpr double kSuiteSeconds = 300.0;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 3) details_ << "\n    " << what;
  }
  void Count(int n) { instances_ += n; }

  // Runs `body`, turning unexpected exceptions into failures.
  bool Run(const std::function<void(Criterion&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      body(*this);
    } catch (const std::exception& e) {
      Check(false, std::string("unexpected exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Check(seconds < kSuiteSeconds, "suite exceeded time budget");
    std::printf("%s %s (%d instances, %d checks, %d failures, %.1fs)%s\n",
                failures_ == 0 ? "PASS" : "FAIL", name_.c_str(), instances_, checks_,
                failures_, seconds, details_.str().c_str());
    std::fflush(stdout);
    return failures_ == 0;
  }

 private:
  std::string name_;
  int checks_ = 0;
  int failures_ = 0;
  int instances_ = 0;
  std::ostringstream details_;
};

std::optional<Rational> OptimumOf(const HcpInstance& in,
                                  const SolveOptions& options = {}) {
  const OptimalResult r = SolveExact(in, options);
  if (r.status == SolveStatus::kInfeasible) return std::nullopt;
  return r.optimum;
}

std::string Show(const std::optional<Rational>& value) {
  return value ? FormatRational(*value) : std::string("infeasible");
}

void CaseTable(Criterion& c) {
  const HcpInstance source = test::LoadInstance("relay_v2.hcpi");
  const HcpInstance target = ReduceV2ToV1(source).target_instance();
  c.Count(1);
  c.Check(TourLength(target, {0, 0, 0, 1}) == Rational(2), "single-hub tour B1-H1-B2");
  c.Check(TourLength(target, {0, 2, 1, 1}) == Rational(5, 2),
          "two-hub tour B1-H3-H2-B2");
  const int nb = target.branch_count();
  auto edge = [&](int u, int w) {
    if (u == w) return true;
    if (u < nb) return source.graph().BranchHub(u, w - nb);
    if (w < nb) return source.graph().BranchHub(w, u - nb);
    return source.graph().HubHub(u - nb, w - nb);
  };
  Rational shortest_with_non_edge = -1;
  for (const Task& t : target.tasks()) {
    for (int h = 0; h < target.hub_count(); ++h) {
      for (int h2 = 0; h2 < target.hub_count(); ++h2) {
        const Tour tour{t.from, h, h2, t.to};
        const Rational len = TourLength(target, tour);
        const bool all_edges = edge(t.from, nb + h) && edge(nb + h, nb + h2) &&
                               edge(nb + h2, t.to);
        if (!all_edges) {
          c.Check(len >= 3, "non-edge tour shorter than 3");
          if (shortest_with_non_edge < 0 || len < shortest_with_non_edge) {
            shortest_with_non_edge = len;
          }
        } else {
          c.Check(len <= Rational(5, 2), "edge-only tour longer than 5/2");
          c.Check(TourFeasible(target, tour), "edge-only tour infeasible");
        }
      }
    }
  }
  // Feasibility flips exactly at 11/4: every edge-only tour is at most 5/2
  // and every other tour at least 3, so thresholds in [5/2, 3) agree.
  c.Check(target.phi() == Rational(11, 4), "phi is 11/4");
  c.Check(shortest_with_non_edge == 3, "shortest non-edge tour is 3");
  for (const Rational& phi : {Rational(5, 2), Rational(11, 4), Rational(29, 10)}) {
    InstanceData data = target.data();
    data.phi = phi;
    const HcpInstance moved = HcpInstance::Build(data);
    c.Check(OptimumOf(moved) == OptimumOf(target), "optimum stable below 3");
  }
  InstanceData data = target.data();
  data.phi = 3;
  const HcpInstance loose = HcpInstance::Build(data);
  c.Check(TourFeasible(loose, {0, 0, 1, 1}), "non-edge tour admitted at phi 3");
  c.Check(!TourFeasible(target, {0, 0, 1, 1}), "non-edge tour rejected at 11/4");
}

void CheckLift(Criterion& c, const ReductionRecord& r, const HcpInstance& source,
               const OptimalResult& target) {
  const Solution lifted = std::get<Solution>(LiftSolution(r, *target.solution));
  c.Check(VerifySolution(source, lifted).ok(), "lifted solution fails verification");
  c.Check(lifted.cost() == target.optimum, "lifted cost differs");
}

void ReductionEquivalence(Criterion& c) {
  int v2 = 0;
  for (std::uint64_t seed = 1; v2 < kReductionInstances; ++seed) {
    const Allocation a = seed % 2 ? Allocation::kMulti : Allocation::kSingle;
    const HcpInstance source = test::SmallInstance(Family::kRandomGraphV2, a, seed, 4, 4);
    const ReductionRecord r = ReduceV2ToV1(source);
    const OptimalResult target = SolveExact(r.target_instance());
    const auto expected = oracle::Optimum(source);
    c.Check(OptimumOf(source) == expected, "V2 source optimum vs brute force");
    c.Check(OptimumOf(r.target_instance()) == expected,
            "V2->V1 optimum " + Show(OptimumOf(r.target_instance())) + " vs " +
                Show(expected) + "\n" + SerializeInstance(source));
    if (target.status == SolveStatus::kOptimal) CheckLift(c, r, source, target);
    ++v2;
  }
  int v3 = 0;
  for (std::uint64_t seed = 1; v3 < kReductionInstances; ++seed) {
    const HcpInstance source =
        test::SmallInstance(Family::kBipartiteV3, Allocation::kSingle, seed, 4, 4);
    const Allocation a = seed % 2 ? Allocation::kMulti : Allocation::kSingle;
    const ReductionRecord r =
        ReduceV3ToV2(source, static_cast<int>(seed % source.branch_count()), a);
    const OptimalResult target = SolveExact(r.target_instance());
    const auto expected = oracle::Optimum(source);
    c.Check(OptimumOf(source) == expected, "V3 source optimum vs brute force");
    c.Check(OptimumOf(r.target_instance()) == expected, "V3->V2 optimum differs");
    if (target.status == SolveStatus::kOptimal) CheckLift(c, r, source, target);
    ++v3;
  }
  int sc = 0;
  for (std::uint64_t seed = 1; sc < kReductionInstances; ++seed) {
    const SetCoverInstance cover =
        RandomSetCover(1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed / 4 % 4),
                       0.4, 1, 1 + static_cast<int>(seed % 3), seed);
    const ReductionRecord r = SetCoverToV3(cover);
    const OptimalResult target = SolveExact(r.target_instance());
    const auto expected = oracle::SetCoverOptimum(cover);
    c.Check(OptimumOf(r.target_instance()) == expected, "set cover->V3 optimum differs");
    if (target.status == SolveStatus::kOptimal) {
      const auto pick = std::get<CoverSelection>(LiftSolution(r, *target.solution));
      c.Check(IsCover(cover, pick.sets), "lifted selection is not a cover");
      c.Check(SelectionWeight(cover, pick.sets) == target.optimum,
              "lifted selection weight differs");
    }
    ++sc;
  }
  c.Count(v2 + v3 + sc);
}

void SetCoverRoundTrip(Criterion& c) {
  for (int i = 0; i < kRoundTripInstances; ++i) {
    const std::uint64_t seed = 1000 + i;
    const SetCoverInstance sc =
        RandomSetCover(1 + i % 12, 1 + i / 12 % 8, 0.3, 1, 1 + i % 4, seed);
    const ReductionRecord forward = SetCoverToV3(sc);
    const ReductionRecord back = V3ToSetCover(forward.target_instance());
    c.Check(SerializeSetCover(std::get<SetCoverInstance>(back.target)) ==
                SerializeSetCover(sc),
            "round trip changed the instance");
  }
  const HcpInstance chain = test::LoadInstance("chain_v3.hcpi");
  const std::string chain_cover = test::ReadData("chain.setcover");
  c.Check(SerializeSetCover(std::get<SetCoverInstance>(V3ToSetCover(chain).target)) ==
              chain_cover,
          "chain instance does not map to its set cover");
  c.Check(SerializeInstance(SetCoverToV3(ParseSetCover(chain_cover)).target_instance()) ==
              SerializeInstance(chain),
          "chain set cover does not map back");
  c.Count(kRoundTripInstances + 1);
}

void GreedyBound(Criterion& c) {
  for (int i = 0; i < kGreedyInstances; ++i) {
    const SetCoverInstance sc = RandomSetCover(
        1 + i % 12, 1 + i / 12 % 8, 0.15 + 0.1 * (i % 5), 1, 1 + i % 6, 7000 + i);
    const SetCoverResult greedy = GreedySetCover(sc);
    const auto opt = oracle::SetCoverOptimum(sc);
    c.Check(opt.has_value(), "generated instance not coverable");
    c.Check(IsCover(sc, greedy.chosen), "greedy output is not a cover");
    c.Check(greedy.weight == SelectionWeight(sc, greedy.chosen), "greedy weight");
    if (opt) {
      c.Check(greedy.weight <= HarmonicNumber(sc.MaxSetSize()) * *opt,
              "greedy exceeds H(d) * OPT");
    }
  }
  c.Count(kGreedyInstances);
}

void Taskwise(Criterion& c) {
  for (Family f : {Family::kEuclideanV1, Family::kRandomGraphV2}) {
    int done = 0;
    for (std::uint64_t seed = 1; done < kTaskwiseInstancesPerVariant; ++seed) {
      const HcpInstance in = test::SmallInstance(f, Allocation::kMulti, seed, 5, 8);
      const auto opt = oracle::Optimum(in);
      if (!opt) {
        c.Check(test::CodeOf([&] { ApproxTaskwise(in); }) == ErrorCode::kInfeasible,
                "infeasible instance not reported");
        continue;
      }
      ++done;
      const Solution s = ApproxTaskwise(in);
      c.Check(VerifySolution(in, s).ok(), "taskwise output fails verification");
      Rational per_task = 0;
      for (const Task& t : in.tasks()) per_task += PerTaskBestPair(in, t)->cost;
      c.Check(s.cost() <= per_task, "cost above the sum of per-task optima");
      const int b = in.branch_count();
      c.Check(s.cost() <= Rational(b * b) * *opt, "cost above |B|^2 * OPT");
    }
    c.Count(done);
  }
}

void BoundedEnumeration(Criterion& c) {
  int done = 0;
  for (std::uint64_t seed = 1; done < kBoundedEnumInstances; ++seed) {
    const Family f = seed % 2 ? Family::kRandomGraphV2 : Family::kEuclideanV1;
    const HcpInstance in = test::SmallInstance(f, Allocation::kMulti, seed, 4, 6, 1);
    std::vector<int> all(in.hub_count());
    for (int h = 0; h < in.hub_count(); ++h) all[h] = h;
    const bool full = FeasibleWithHubs(in, all).has_value();
    const OptimalResult exact = SolveExact(in);
    c.Check(full == (exact.status == SolveStatus::kOptimal), "full set feasibility");
    if (!full) {
      for (int k = 1; k <= 3; ++k) {
        c.Check(test::CodeOf([&] { ApproxBoundedEnumeration(in, k); }) ==
                    ErrorCode::kInfeasible,
                "infeasible instance not reported");
      }
      continue;
    }
    ++done;
    const Rational m = exact.optimum;
    const int mi = static_cast<int>(exact.solution->open_hubs().size());
    c.Check(m == Rational(mi), "unit costs give optimum = size");
    for (int k = std::max(mi, 1); k <= mi + 2; ++k) {
      const Solution s = ApproxBoundedEnumeration(in, k);
      c.Check(s.cost() == m, "k >= m did not return m");
      c.Check(VerifySolution(in, s).ok(), "bounded enumeration output fails verification");
    }
    for (int k = 1; k < mi; ++k) {
      const Solution s = ApproxBoundedEnumeration(in, k);
      c.Check(s.cost() == Rational(in.hub_count()), "k < m did not open every hub");
      c.Check(VerifySolution(in, s).ok(), "fallback output fails verification");
    }
  }
  c.Count(done);
}

void Queens(Criterion& c) {
  const ReductionRecord three = QueensToSa2(QueensInstance::Build(3, {{3, 3}}));
  c.Check(SolveExact(three.target_instance()).status == SolveStatus::kInfeasible,
          "3x3 with c3 is not infeasible");
  std::set<std::set<std::string>> edges;
  const HcpInstance& t = three.target_instance();
  for (int h = 0; h < t.hub_count(); ++h) {
    for (int h2 = h + 1; h2 < t.hub_count(); ++h2) {
      if (t.graph().HubHub(h, h2)) edges.insert({t.hub_name(h), t.hub_name(h2)});
    }
  }
  const std::set<std::set<std::string>> expected_edges = {
      {"a3", "b1"}, {"c3", "b1"}, {"b3", "a1"}, {"b3", "c1"},
      {"a2", "c1"}, {"c2", "a1"}, {"a2", "c3"}, {"c2", "a3"}};
  c.Check(edges == expected_edges, "3x3 hub edges differ from the expected list");

  SolveOptions options;
  options.limits.max_hubs = 25;
  int feasible = 0;
  for (int i = 0; i < kQueensInstances; ++i) {
    const std::uint64_t seed = 500 + i;
    const int n = 4 + i % 2;
    const QueensInstance q = RandomQueensInstance(n, 1 + i % 3, seed);
    const bool completable = oracle::QueensCompletable(q);
    c.Check(SolveQueensCompletion(q).has_value() == completable,
            "completion solver disagrees with permutation scan");
    const ReductionRecord r = QueensToSa2(q);
    const OptimalResult solved = SolveExact(r.target_instance(), options);
    c.Check((solved.status == SolveStatus::kOptimal) == completable,
            "SA2 feasibility differs from completability");
    if (solved.status != SolveStatus::kOptimal) continue;
    ++feasible;
    const auto p = std::get<QueensPlacement>(LiftSolution(r, *solved.solution));
    c.Check(IsValidCompletion(q, p), "lifted placement is invalid");
  }
  c.Check(feasible > 0 && feasible < kQueensInstances, "sample covers both outcomes");
  c.Count(kQueensInstances + 1);
}

void Capacity(Criterion& c) {
  int done = 0;
  for (std::uint64_t seed = 1; done < kCapacityInstances; ++seed) {
    GeneratorSpec spec;
    spec.family = Family::kBipartiteV3;
    spec.branches = 2 + static_cast<int>(seed % 5);
    spec.hubs = 2 + static_cast<int>(seed / 5 % 5);
    spec.edge_probability = 0.3 + 0.1 * static_cast<double>(seed % 4);
    const HcpInstance in = GenerateInstance(spec, seed);
    const OptimalResult free = SolveExact(in);
    // Capacity zero is not a valid instance, so m must be at least 2.
    if (free.status != SolveStatus::kOptimal || free.optimum < 2) continue;
    ++done;
    const int m = static_cast<int>(free.solution->open_hubs().size());
    c.Check(free.optimum == Rational(m), "unit costs give optimum = size");
    const OptimalResult at_m = SolveExact(in.WithCapacity(m));
    c.Check(at_m.status == SolveStatus::kOptimal && at_m.optimum == m,
            "capacity m does not return m");
    c.Check(SolveExact(in.WithCapacity(m - 1)).status == SolveStatus::kInfeasible,
            "capacity m-1 is feasible");
    c.Check(oracle::Optimum(in.WithCapacity(m - 1)) == std::nullopt,
            "brute force finds a solution at capacity m-1");
  }
  c.Count(done);
}

std::string SolveText(const HcpInstance& in, int workers) {
  SolveOptions options;
  options.workers = workers;
  const OptimalResult r = SolveExact(in, options);
  return r.solution ? SerializeSolution(in, *r.solution) : "infeasible";
}

template <typename F>
std::string Guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return "error " + std::to_string(static_cast<int>(e.code()));
  }
}

void Determinism(Criterion& c) {
  auto twice = [&](const std::string& what, const std::function<std::string(int)>& run) {
    const std::string one = run(1);
    c.Check(run(1) == one, what + " differs across runs");
    c.Check(run(kDeterminismWorkers) == one, what + " depends on the worker count");
  };
  int instances = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (Family f : {Family::kEuclideanV1, Family::kRandomGraphV2,
                     Family::kBipartiteV3}) {
      const Allocation a = seed % 2 ? Allocation::kMulti : Allocation::kSingle;
      const HcpInstance in = test::SmallInstance(f, a, seed, 5, 6, 3);
      ++instances;
      twice("instance generation", [&](int) {
        return SerializeInstance(test::SmallInstance(f, a, seed, 5, 6, 3));
      });
      twice("exact solver", [&](int w) { return SolveText(in, w); });
      if (f != Family::kBipartiteV3) {
        twice("taskwise", [&](int w) {
          return Guarded([&] { return SerializeSolution(in, ApproxTaskwise(in, w)); });
        });
        twice("bounded enumeration", [&](int) {
          return Guarded([&] {
            return SerializeSolution(in, ApproxBoundedEnumeration(in.WithAllocation(
                                                                      Allocation::kMulti),
                                                                  2));
          });
        });
      } else {
        twice("greedy", [&](int) {
          return Guarded([&] { return SerializeSolution(in, SolveVariant3Greedy(in)); });
        });
        twice("V3->V2", [&](int) { return SerializeRecord(ReduceV3ToV2(in)); });
        twice("V3->set cover", [&](int) { return SerializeRecord(V3ToSetCover(in)); });
      }
      if (f == Family::kRandomGraphV2) {
        twice("V2->V1", [&](int) { return SerializeRecord(ReduceV2ToV1(in)); });
      }
    }
    const SetCoverInstance sc = RandomSetCover(6, 5, 0.4, 1, 3, seed);
    twice("set cover->V3", [&](int) { return SerializeRecord(SetCoverToV3(sc)); });
    const QueensInstance q = RandomQueensInstance(5, 2, seed);
    twice("queens->SA2", [&](int) { return SerializeRecord(QueensToSa2(q)); });
    instances += 2;
  }
  BenchConfig bench;
  bench.spec.family = Family::kRandomGraphV2;
  bench.spec.cost_max = 3;
  bench.count = 20;
  bench.algorithms = {"exact", "taskwise", "bounded-enum"};
  twice("bench", [&](int w) {
    BenchConfig config = bench;
    config.workers = w;
    config.solve.workers = w;
    return BenchCsv(RunBench(config), false);
  });
  c.Count(instances + bench.count);
}

}  // namespace
}  // namespace hubcover

int main() {
  using hubcover::Criterion;
  struct Entry {
    const char* name;
    void (*body)(Criterion&);
  };
  const Entry entries[] = {
      {"1 case table of the V2->V1 transform", hubcover::CaseTable},
      {"2 reduction equivalence", hubcover::ReductionEquivalence},
      {"3 set cover round trip", hubcover::SetCoverRoundTrip},
      {"4 greedy set cover bound", hubcover::GreedyBound},
      {"5 task-wise approximation", hubcover::Taskwise},
      {"6 bounded enumeration", hubcover::BoundedEnumeration},
      {"7 queens completion equivalence", hubcover::Queens},
      {"8 capacitated variant 3", hubcover::Capacity},
      {"9 determinism", hubcover::Determinism},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    Criterion criterion(e.name);
    if (!criterion.Run(e.body)) ++failed;
  }
  std::printf("%s: %d of 9 criteria passed\n", failed == 0 ? "PASS" : "FAIL", 9 - failed);
  return failed == 0 ? 0 : 1;
}
