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

#include "hubcover/feasibility.h"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "hubcover/error.h"

namespace hubcover {

std::string_view ConstraintFamilyName(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::kTaskCoverage: return "TaskCoverage";
    case ConstraintFamily::kClosedHubUsed: return "ClosedHubUsed";
    case ConstraintFamily::kTourTooLong: return "TourTooLong";
    case ConstraintFamily::kMissingEdge: return "MissingEdge";
    case ConstraintFamily::kSingleAllocationBroken:
      return "SingleAllocationBroken";
    case ConstraintFamily::kCapacityExceeded: return "CapacityExceeded";
    case ConstraintFamily::kBranchUncovered: return "BranchUncovered";
  }
  return "?";
}

bool VerificationReport::Has(ConstraintFamily family) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.family == family; });
}

std::string VerificationReport::ToString() const {
  std::ostringstream out;
  out << (ok() ? "ok" : "violated") << "\n";
  for (const auto& v : violations) {
    out << ConstraintFamilyName(v.family) << ": " << v.description << "\n";
  }
  return out.str();
}

Rational TourLength(const HcpInstance& instance, const Tour& tour) {
  if (instance.variant() != Variant::kV1) {
    throw Error(ErrorCode::kWrongVariant, "tour length is defined for variant 1");
  }
  const MetricMatrix& d = instance.metric();
  const int hv = instance.HubVertex(tour.h);
  const int hv2 = instance.HubVertex(tour.h2);
  return d.at(instance.BranchVertex(tour.b), hv) +
         instance.alpha() * d.at(hv, hv2) +
         d.at(hv2, instance.BranchVertex(tour.b2));
}

namespace {

bool HubLegOk(const HcpInstance& instance, int h, int h2) {
  return h == h2 || instance.alpha() == 0 || instance.graph().HubHub(h, h2);
}

}  // namespace

bool TourFeasible(const HcpInstance& instance, const Tour& tour) {
  switch (instance.variant()) {
    case Variant::kV1:
      return TourLength(instance, tour) <= instance.phi();
    case Variant::kV2: {
      const AdjacencyGraph& g = instance.graph();
      return g.BranchHub(tour.b, tour.h) && g.BranchHub(tour.b2, tour.h2) &&
             HubLegOk(instance, tour.h, tour.h2);
    }
    case Variant::kV3:
      break;
  }
  throw Error(ErrorCode::kWrongVariant,
              "variant 3 has no tours; branch coverage only");
}

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(const HcpInstance& instance) : instance_(instance) {}

  void Add(ConstraintFamily family, std::vector<int> key,
           std::string description) {
    report_.violations.push_back(
        {family, std::move(key), std::move(description)});
  }

  std::string B(int b) const { return instance_.branch_name(b); }
  std::string H(int h) const { return instance_.hub_name(h); }
  std::string TaskName(const Task& t) const {
    return "task (" + B(t.from) + "," + B(t.to) + ")";
  }
  std::string TourName(const Tour& t) const {
    return B(t.b) + "-" + H(t.h) + "-" + H(t.h2) + "-" + B(t.b2);
  }

  VerificationReport Finish() {
    std::stable_sort(report_.violations.begin(), report_.violations.end(),
                     [](const Violation& a, const Violation& b) {
                       return std::tie(a.family, a.key) <
                              std::tie(b.family, b.key);
                     });
    return std::move(report_);
  }

 private:
  const HcpInstance& instance_;
  VerificationReport report_;
};

// Threshold check for one tour of a V1/V2 instance.
void CheckTour(const HcpInstance& instance, const Task& task, const Tour& tour,
               ReportBuilder& out) {
  const std::vector<int> key = {task.from, task.to};
  if (instance.variant() == Variant::kV1) {
    const Rational length = TourLength(instance, tour);
    if (length > instance.phi()) {
      out.Add(ConstraintFamily::kTourTooLong, key,
              out.TaskName(task) + ": tour " + out.TourName(tour) +
                  " has length " + FormatRational(length) + " > phi " +
                  FormatRational(instance.phi()));
    }
    return;
  }
  const AdjacencyGraph& g = instance.graph();
  if (!g.BranchHub(tour.b, tour.h)) {
    out.Add(ConstraintFamily::kMissingEdge, key,
            out.TaskName(task) + ": no edge " + out.B(tour.b) + "-" +
                out.H(tour.h));
  }
  if (!HubLegOk(instance, tour.h, tour.h2)) {
    out.Add(ConstraintFamily::kMissingEdge, key,
            out.TaskName(task) + ": no edge " + out.H(tour.h) + "-" +
                out.H(tour.h2));
  }
  if (!g.BranchHub(tour.b2, tour.h2)) {
    out.Add(ConstraintFamily::kMissingEdge, key,
            out.TaskName(task) + ": no edge " + out.H(tour.h2) + "-" +
                out.B(tour.b2));
  }
}

void VerifyMulti(const HcpInstance& instance, const Solution& solution,
                 const MultiWitness& witness, ReportBuilder& out) {
  for (const Task& task : instance.tasks()) {
    const auto it = witness.tours.find(task);
    if (it == witness.tours.end()) {
      out.Add(ConstraintFamily::kTaskCoverage, {task.from, task.to},
              out.TaskName(task) + " has no tour");
      continue;
    }
    const Tour& tour = it->second;
    if (tour.b != task.from || tour.b2 != task.to) {
      out.Add(ConstraintFamily::kTaskCoverage, {task.from, task.to},
              out.TaskName(task) + " is served by tour " + out.TourName(tour) +
                  " with other endpoints");
      continue;
    }
    for (int h : {tour.h, tour.h2}) {
      if (!solution.IsOpen(h)) {
        out.Add(ConstraintFamily::kClosedHubUsed, {task.from, task.to, h},
                out.TaskName(task) + " uses closed hub " + out.H(h));
      }
      if (tour.single_hub()) break;
    }
    CheckTour(instance, task, tour, out);
  }
}

void VerifySingle(const HcpInstance& instance, const Solution& solution,
                  const SingleWitness& witness, ReportBuilder& out) {
  const auto& alloc = witness.hub_of_branch;
  for (int b = 0; b < instance.branch_count(); ++b) {
    const auto it = alloc.find(b);
    if (it == alloc.end()) {
      out.Add(ConstraintFamily::kSingleAllocationBroken, {b},
              "branch " + out.B(b) + " is not allocated to a hub");
      continue;
    }
    const int h = it->second;
    if (!solution.IsOpen(h)) {
      out.Add(ConstraintFamily::kClosedHubUsed, {b, h},
              "branch " + out.B(b) + " is allocated to closed hub " + out.H(h));
    }
    if (instance.variant() == Variant::kV2 &&
        !instance.graph().BranchHub(b, h)) {
      out.Add(ConstraintFamily::kMissingEdge, {b, h},
              "branch " + out.B(b) + " is allocated to non-adjacent hub " +
                  out.H(h));
    }
  }
  for (const Task& task : instance.tasks()) {
    const auto from = alloc.find(task.from);
    const auto to = alloc.find(task.to);
    if (from == alloc.end() || to == alloc.end()) continue;
    const Tour tour{task.from, from->second, to->second, task.to};
    if (instance.variant() == Variant::kV1) {
      CheckTour(instance, task, tour, out);
    } else if (!HubLegOk(instance, tour.h, tour.h2)) {
      // Branch legs were already reported per branch above.
      out.Add(ConstraintFamily::kMissingEdge, {task.from, task.to},
              out.TaskName(task) + ": allocated hubs " + out.H(tour.h) +
                  " and " + out.H(tour.h2) + " are not connected");
    }
  }
}

void VerifyCover(const HcpInstance& instance, const Solution& solution,
                 const CoverWitness& witness, ReportBuilder& out) {
  for (int b = 0; b < instance.branch_count(); ++b) {
    const auto it = witness.hub_of_branch.find(b);
    if (it == witness.hub_of_branch.end()) {
      out.Add(ConstraintFamily::kBranchUncovered, {b},
              "branch " + out.B(b) + " is not covered");
      continue;
    }
    const int h = it->second;
    if (!solution.IsOpen(h)) {
      out.Add(ConstraintFamily::kClosedHubUsed, {b, h},
              "branch " + out.B(b) + " is covered by closed hub " + out.H(h));
    }
    if (!instance.graph().BranchHub(b, h)) {
      out.Add(ConstraintFamily::kMissingEdge, {b, h},
              "branch " + out.B(b) + " is not adjacent to hub " + out.H(h));
    }
  }
}

}  // namespace

VerificationReport VerifySolution(const HcpInstance& instance,
                                  const Solution& solution) {
  if (KindOf(solution.witness()) != ExpectedWitnessKind(instance)) {
    throw Error(ErrorCode::kWitnessMismatch,
                "witness shape does not match the instance's variant and "
                "allocation");
  }
  ReportBuilder out(instance);
  std::visit(
      [&](const auto& witness) {
        using W = std::decay_t<decltype(witness)>;
        if constexpr (std::is_same_v<W, MultiWitness>) {
          VerifyMulti(instance, solution, witness, out);
        } else if constexpr (std::is_same_v<W, SingleWitness>) {
          VerifySingle(instance, solution, witness, out);
        } else {
          VerifyCover(instance, solution, witness, out);
        }
      },
      solution.witness());
  if (instance.capacity().has_value() &&
      static_cast<int>(solution.open_hubs().size()) > *instance.capacity()) {
    out.Add(ConstraintFamily::kCapacityExceeded, {},
            std::to_string(solution.open_hubs().size()) +
                " hubs open, capacity " + std::to_string(*instance.capacity()));
  }
  return out.Finish();
}

}  // namespace hubcover
