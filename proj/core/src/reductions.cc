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

#include "hubcover/reductions.h"

#include <algorithm>
#include <string>
#include <utility>

#include "hubcover/error.h"
#include "hubcover/feasibility.h"
#include "hubcover/hcp_format.h"

namespace hubcover {

std::string_view ReductionKindName(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kV2ToV1: return "v2-to-v1";
    case ReductionKind::kV3ToV2: return "v3-to-v2";
    case ReductionKind::kSetCoverToV3: return "setcover-to-v3";
    case ReductionKind::kV3ToSetCover: return "v3-to-setcover";
    case ReductionKind::kQueensToSa2: return "queens-to-sa2";
  }
  return "?";
}

std::optional<ReductionKind> ParseReductionKind(std::string_view name) {
  for (ReductionKind kind :
       {ReductionKind::kV2ToV1, ReductionKind::kV3ToV2,
        ReductionKind::kSetCoverToV3, ReductionKind::kV3ToSetCover,
        ReductionKind::kQueensToSa2}) {
    if (ReductionKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

std::vector<int> Identity(int n) {
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  return map;
}

void RequireVariant(const HcpInstance& instance, Variant variant) {
  if (instance.variant() != variant) {
    throw Error(ErrorCode::kWrongVariant,
                std::string("reduction expects a ") +
                    std::string(VariantName(variant)) + " instance, got " +
                    std::string(VariantName(instance.variant())));
  }
}

ReductionRecord MakeRecord(ReductionKind kind, SourceProblem source,
                           TargetProblem target) {
  std::string digest = ProblemDigest(source);
  return ReductionRecord{kind, std::move(digest), std::move(source),
                         std::move(target), {}, {}, {}};
}

}  // namespace

ReductionRecord ReduceV2ToV1(const HcpInstance& source) {
  RequireVariant(source, Variant::kV2);
  const int branches = source.branch_count();
  const int hubs = source.hub_count();
  const AdjacencyGraph& graph = source.graph();
  const Rational one = 1;
  const Rational two = 2;

  MetricMatrix metric(branches + hubs);
  for (int u = 0; u < branches + hubs; ++u) {
    for (int v = u + 1; v < branches + hubs; ++v) metric.Set(u, v, two);
  }
  for (int b = 0; b < branches; ++b) {
    for (int h = 0; h < hubs; ++h) {
      if (graph.BranchHub(b, h)) metric.Set(b, branches + h, one);
    }
  }
  const bool free_hub_leg = source.alpha() == 0;
  for (int h = 0; h < hubs; ++h) {
    for (int h2 = h + 1; h2 < hubs; ++h2) {
      if (free_hub_leg || graph.HubHub(h, h2)) {
        metric.Set(branches + h, branches + h2, one);
      }
    }
  }

  InstanceData data = source.data();
  data.geometry = std::move(metric);
  data.alpha = Rational(1, 2);
  data.phi = Rational(11, 4);
  data.variant = Variant::kV1;
  ReductionRecord record = MakeRecord(ReductionKind::kV2ToV1, source,
                                      HcpInstance::Build(std::move(data)));
  record.branch_map = Identity(branches);
  record.hub_map = Identity(hubs);
  return record;
}

ReductionRecord ReduceV3ToV2(const HcpInstance& source, std::optional<int> b0,
                             Allocation allocation) {
  RequireVariant(source, Variant::kV3);
  const int branches = source.branch_count();
  const int hubs = source.hub_count();
  const int anchor = b0.value_or(0);
  if (branches > 0 && (anchor < 0 || anchor >= branches)) {
    throw Error(ErrorCode::kInvalidInput, "b0 is not a branch of the instance");
  }

  AdjacencyGraph graph = source.graph();
  for (int h = 0; h < hubs; ++h) {
    for (int h2 = h + 1; h2 < hubs; ++h2) graph.AddHubHubEdge(h, h2);
  }
  InstanceData data = source.data();
  data.geometry = std::move(graph);
  data.alpha = 0;
  data.phi = 0;
  data.variant = Variant::kV2;
  data.allocation = allocation;
  data.tasks.clear();
  for (int b = 0; b < branches; ++b) data.tasks.push_back({b, anchor});

  ReductionRecord record = MakeRecord(ReductionKind::kV3ToV2, source,
                                      HcpInstance::Build(std::move(data)));
  record.branch_map = Identity(branches);
  record.hub_map = Identity(hubs);
  if (branches > 0) record.b0 = anchor;
  return record;
}

ReductionRecord SetCoverToV3(const SetCoverInstance& source) {
  InstanceData data;
  data.variant = Variant::kV3;
  data.allocation = Allocation::kSingle;
  data.branches = source.elements();
  AdjacencyGraph graph(source.element_count(), source.set_count());
  for (int s = 0; s < source.set_count(); ++s) {
    const WeightedSet& set = source.sets()[s];
    data.hubs.push_back(set.name);
    data.opening_costs.push_back(set.weight);
    for (int e : set.members) graph.AddBranchHubEdge(e, s);
  }
  data.geometry = std::move(graph);
  ReductionRecord record = MakeRecord(ReductionKind::kSetCoverToV3, source,
                                      HcpInstance::Build(std::move(data)));
  record.branch_map = Identity(source.element_count());
  record.hub_map = Identity(source.set_count());
  return record;
}

ReductionRecord V3ToSetCover(const HcpInstance& source) {
  RequireVariant(source, Variant::kV3);
  const AdjacencyGraph& graph = source.graph();
  std::vector<std::string> elements;
  for (int b = 0; b < source.branch_count(); ++b) {
    elements.push_back(source.branch_name(b));
  }
  std::vector<WeightedSet> sets;
  std::vector<int> hub_map;
  for (int h = 0; h < source.hub_count(); ++h) {
    WeightedSet set{source.hub_name(h), source.opening_cost(h), {}};
    for (int b = 0; b < source.branch_count(); ++b) {
      if (graph.BranchHub(b, h)) set.members.push_back(b);
    }
    if (set.members.empty()) continue;
    sets.push_back(std::move(set));
    hub_map.push_back(h);
  }
  ReductionRecord record = MakeRecord(
      ReductionKind::kV3ToSetCover, source,
      SetCoverInstance::Build(std::move(elements), std::move(sets)));
  record.branch_map = Identity(source.branch_count());
  record.hub_map = std::move(hub_map);
  return record;
}

std::string SquareName(Square square) {
  std::string letters;
  for (int c = square.col; c > 0; c = (c - 1) / 26) {
    letters.insert(letters.begin(), static_cast<char>('a' + (c - 1) % 26));
  }
  return letters + std::to_string(square.row);
}

ReductionRecord QueensToSa2(const QueensInstance& source) {
  const int n = source.n();
  auto index = [n](int row, int col) { return (row - 1) * n + (col - 1); };

  InstanceData data;
  data.variant = Variant::kV2;
  data.allocation = Allocation::kSingle;
  data.alpha = 1;
  for (int row = 1; row <= n; ++row) {
    data.branches.push_back("B" + std::to_string(row));
  }
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col) {
      data.hubs.push_back(SquareName({row, col}));
      data.opening_costs.push_back(1);
    }
  }
  AdjacencyGraph graph(n, n * n);
  for (int row = 1; row <= n; ++row) {
    const auto fixed = source.FixedColumn(row);
    for (int col = 1; col <= n; ++col) {
      if (!fixed || *fixed == col) {
        graph.AddBranchHubEdge(row - 1, index(row, col));
      }
    }
  }
  for (int a = 0; a < n * n; ++a) {
    const Square sa{a / n + 1, a % n + 1};
    for (int b = a + 1; b < n * n; ++b) {
      const Square sb{b / n + 1, b % n + 1};
      if (!Attacks(sa, sb)) graph.AddHubHubEdge(a, b);
    }
  }
  data.geometry = std::move(graph);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) data.tasks.push_back({i, j});
  }

  ReductionRecord record = MakeRecord(ReductionKind::kQueensToSa2, source,
                                      HcpInstance::Build(std::move(data)));
  for (int row = 1; row <= n; ++row) record.branch_map.push_back(row);
  record.hub_map = Identity(n * n);
  return record;
}

namespace {

class QueensSearch {
 public:
  explicit QueensSearch(const QueensInstance& instance)
      : n_(instance.n()),
        column_(n_ + 1, 0),
        up_(2 * n_ + 1, 0),
        down_(2 * n_ + 1, 0),
        placement_(n_, 0) {
    for (const Square& s : instance.placed()) Mark(s.row, s.col, 1);
    for (int row = 1; row <= n_; ++row) {
      if (const auto col = instance.FixedColumn(row)) {
        placement_[row - 1] = *col;
      } else {
        free_rows_.push_back(row);
      }
    }
  }

  std::optional<QueensPlacement> Run() {
    if (!Place(0)) return std::nullopt;
    QueensPlacement result;
    for (int row = 1; row <= n_; ++row) {
      result.queens.push_back({row, placement_[row - 1]});
    }
    return result;
  }

 private:
  void Mark(int row, int col, char value) {
    column_[col] = value;
    up_[row + col] = value;
    down_[row - col + n_] = value;
  }

  bool Free(int row, int col) const {
    return !column_[col] && !up_[row + col] && !down_[row - col + n_];
  }

  bool Place(std::size_t i) {
    if (i == free_rows_.size()) return true;
    const int row = free_rows_[i];
    for (int col = 1; col <= n_; ++col) {
      if (!Free(row, col)) continue;
      Mark(row, col, 1);
      placement_[row - 1] = col;
      if (Place(i + 1)) return true;
      Mark(row, col, 0);
    }
    return false;
  }

  int n_;
  std::vector<char> column_;
  std::vector<char> up_;    // row + col
  std::vector<char> down_;  // row - col + n
  std::vector<int> placement_;
  std::vector<int> free_rows_;
};

[[noreturn]] void Unliftable(const std::string& message) {
  throw Error(ErrorCode::kUnliftableWitness, message);
}

const Solution& RequireHcpSolution(const AnySolution& solution) {
  const auto* s = std::get_if<Solution>(&solution);
  if (s == nullptr) Unliftable("expected an HCP solution of the target");
  return *s;
}

void RequireVerified(const HcpInstance& instance, const Solution& solution,
                     std::string_view what) {
  VerificationReport report;
  try {
    report = VerifySolution(instance, solution);
  } catch (const Error& e) {
    Unliftable(std::string(what) + ": " + e.what());
  }
  if (!report.ok()) {
    Unliftable(std::string(what) + " fails verification: " +
               report.violations.front().description);
  }
}

std::vector<int> MapHubs(const std::vector<int>& hubs,
                         const std::vector<int>& hub_map) {
  std::vector<int> out;
  for (int h : hubs) {
    if (h < 0 || h >= static_cast<int>(hub_map.size()) || hub_map[h] < 0) {
      Unliftable("hub has no preimage in the source");
    }
    out.push_back(hub_map[h]);
  }
  return out;
}

CoverWitness LowestAdjacentOpenHub(const HcpInstance& instance,
                                   const std::vector<int>& open) {
  CoverWitness witness;
  for (int b = 0; b < instance.branch_count(); ++b) {
    for (int h : open) {
      if (instance.graph().BranchHub(b, h)) {
        witness.hub_of_branch[b] = h;
        break;
      }
    }
  }
  return witness;
}

}  // namespace

std::optional<QueensPlacement> SolveQueensCompletion(
    const QueensInstance& instance) {
  return QueensSearch(instance).Run();
}

AnySolution LiftSolution(const ReductionRecord& record,
                         const AnySolution& target_solution) {
  switch (record.kind) {
    case ReductionKind::kV2ToV1: {
      const Solution& target = RequireHcpSolution(target_solution);
      RequireVerified(record.target_instance(), target, "target solution");
      const auto& source = std::get<HcpInstance>(record.source);
      Solution lifted = Solution::Make(
          source, MapHubs(target.open_hubs(), record.hub_map), target.witness());
      RequireVerified(source, lifted, "lifted solution");
      return lifted;
    }
    case ReductionKind::kV3ToV2: {
      const Solution& target = RequireHcpSolution(target_solution);
      RequireVerified(record.target_instance(), target, "target solution");
      const auto& source = std::get<HcpInstance>(record.source);
      CoverWitness witness;
      if (const auto* multi = std::get_if<MultiWitness>(&target.witness())) {
        // The first hub of each tour (b, b0) covers b; the hub-hub leg is
        // ignored.
        for (const auto& [task, tour] : multi->tours) {
          witness.hub_of_branch[record.branch_map[task.from]] =
              record.hub_map[tour.h];
        }
      } else {
        for (const auto& [b, h] :
             std::get<SingleWitness>(target.witness()).hub_of_branch) {
          witness.hub_of_branch[record.branch_map[b]] = record.hub_map[h];
        }
      }
      Solution lifted =
          Solution::Make(source, MapHubs(target.open_hubs(), record.hub_map),
                         std::move(witness));
      RequireVerified(source, lifted, "lifted solution");
      return lifted;
    }
    case ReductionKind::kSetCoverToV3: {
      const Solution& target = RequireHcpSolution(target_solution);
      RequireVerified(record.target_instance(), target, "target solution");
      const auto& source = std::get<SetCoverInstance>(record.source);
      CoverSelection selection{MapHubs(target.open_hubs(), record.hub_map)};
      std::sort(selection.sets.begin(), selection.sets.end());
      if (!IsCover(source, selection.sets)) {
        Unliftable("lifted selection is not a cover");
      }
      return selection;
    }
    case ReductionKind::kV3ToSetCover: {
      const auto* selection = std::get_if<CoverSelection>(&target_solution);
      if (selection == nullptr) Unliftable("expected a set cover selection");
      const auto& cover = std::get<SetCoverInstance>(record.target);
      if (!IsCover(cover, selection->sets)) {
        Unliftable("target selection is not a cover");
      }
      const auto& source = std::get<HcpInstance>(record.source);
      std::vector<int> open = MapHubs(selection->sets, record.hub_map);
      std::sort(open.begin(), open.end());
      CoverWitness witness = LowestAdjacentOpenHub(source, open);
      Solution lifted = Solution::Make(source, std::move(open), std::move(witness));
      RequireVerified(source, lifted, "lifted solution");
      return lifted;
    }
    case ReductionKind::kQueensToSa2: {
      const Solution& target = RequireHcpSolution(target_solution);
      RequireVerified(record.target_instance(), target, "target solution");
      const auto& source = std::get<QueensInstance>(record.source);
      const int n = source.n();
      const auto& alloc = std::get<SingleWitness>(target.witness()).hub_of_branch;
      QueensPlacement placement;
      for (int b = 0; b < n; ++b) {
        const int row = record.branch_map[b];
        const int square = record.hub_map[alloc.at(b)];
        const Square s{square / n + 1, square % n + 1};
        if (s.row != row) Unliftable("queen allocated outside its row");
        placement.queens.push_back(s);
      }
      std::sort(placement.queens.begin(), placement.queens.end());
      if (!IsValidCompletion(source, placement)) {
        Unliftable("lifted placement is not a valid completion");
      }
      return placement;
    }
  }
  Unliftable("unknown reduction kind");
}

}  // namespace hubcover
