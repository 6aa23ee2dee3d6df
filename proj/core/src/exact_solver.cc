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

#include "hubcover/exact_solver.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "hubcover/error.h"
#include "hubcover/feasibility.h"
#include "hubcover/parallel.h"

namespace hubcover {

SolverLimits SolverLimits::Parse(std::string_view text) {
  SolverLimits limits;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view()
                                           : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kBadSpec,
                  "limit '" + std::string(item) + "' is not key=value");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    int parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoi(value, &used);
      if (used != value.size() || parsed < 0) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadSpec, "bad limit value '" + value + "'");
    }
    if (key == "hubs") {
      limits.max_hubs = parsed;
    } else if (key == "branches") {
      limits.max_branches = parsed;
    } else {
      throw Error(ErrorCode::kBadSpec, "unknown limit '" + key + "'");
    }
  }
  return limits;
}

SolverLimits SolverLimits::FromEnvironment() {
  const char* env = std::getenv("HUBCOVER_LIMITS");
  if (env == nullptr) return SolverLimits{};
  return Parse(env);
}

HubMask MaskOf(std::span<const int> hubs) {
  HubMask mask = 0;
  for (int h : hubs) mask |= HubMask{1} << h;
  return mask;
}

std::vector<int> HubsOf(HubMask mask) {
  std::vector<int> hubs;
  while (mask != 0) {
    hubs.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return hubs;
}

namespace {

HubMask AllHubs(int hubs) {
  return hubs >= kMaxMaskHubs ? ~HubMask{0} : (HubMask{1} << hubs) - 1;
}

bool IsSingleTaskVariant(const HcpInstance& instance) {
  return instance.variant() != Variant::kV3 &&
         instance.allocation() == Allocation::kSingle;
}

}  // namespace

HubSetChecker::HubSetChecker(const HcpInstance& instance)
    : instance_(&instance),
      hubs_(instance.hub_count()),
      branches_(instance.branch_count()) {
  if (hubs_ > kMaxMaskHubs) {
    throw Error(ErrorCode::kLimitExceeded,
                "at most " + std::to_string(kMaxMaskHubs) + " hubs supported");
  }
  const HubMask all = AllHubs(hubs_);

  if (instance.variant() == Variant::kV3) {
    unary_.assign(branches_, 0);
    for (int b = 0; b < branches_; ++b) {
      for (int h = 0; h < hubs_; ++h) {
        if (instance.graph().BranchHub(b, h)) unary_[b] |= HubMask{1} << h;
      }
    }
    return;
  }

  const auto& tasks = instance.tasks();
  std::vector<std::vector<char>> pair_ok(tasks.size());
  task_pairs_.resize(tasks.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    pair_ok[t].assign(static_cast<std::size_t>(hubs_) * hubs_, 0);
    for (int h = 0; h < hubs_; ++h) {
      for (int h2 = 0; h2 < hubs_; ++h2) {
        if (TourFeasible(instance, {tasks[t].from, h, h2, tasks[t].to})) {
          pair_ok[t][h * hubs_ + h2] = 1;
          task_pairs_[t].emplace_back(h, h2);
        }
      }
    }
  }
  if (instance.allocation() == Allocation::kMulti) return;

  unary_.assign(branches_, all);
  if (instance.variant() == Variant::kV2) {
    for (int b = 0; b < branches_; ++b) {
      HubMask adjacent = 0;
      for (int h = 0; h < hubs_; ++h) {
        if (instance.graph().BranchHub(b, h)) adjacent |= HubMask{1} << h;
      }
      unary_[b] = adjacent;
    }
  }

  neighbours_.assign(branches_, {});
  std::vector<int> degree(branches_, 0);
  compatible_.assign(static_cast<std::size_t>(branches_) * hubs_ * branches_,
                     all);
  auto compat = [&](int b, int h, int c) -> HubMask& {
    return compatible_[(static_cast<std::size_t>(b) * hubs_ + h) * branches_ +
                       c];
  };
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const int from = tasks[t].from;
    const int to = tasks[t].to;
    ++degree[from];
    if (to != from) ++degree[to];
    if (from == to) {
      HubMask self = 0;
      for (int h = 0; h < hubs_; ++h) {
        if (pair_ok[t][h * hubs_ + h]) self |= HubMask{1} << h;
      }
      unary_[from] &= self;
      continue;
    }
    neighbours_[from].push_back(to);
    neighbours_[to].push_back(from);
    for (int h = 0; h < hubs_; ++h) {
      HubMask forward = 0;   // hubs of `to` given from = h
      HubMask backward = 0;  // hubs of `from` given to = h
      for (int h2 = 0; h2 < hubs_; ++h2) {
        if (pair_ok[t][h * hubs_ + h2]) forward |= HubMask{1} << h2;
        if (pair_ok[t][h2 * hubs_ + h]) backward |= HubMask{1} << h2;
      }
      compat(from, h, to) &= forward;
      compat(to, h, from) &= backward;
    }
  }
  for (auto& list : neighbours_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  branch_order_.resize(branches_);
  std::iota(branch_order_.begin(), branch_order_.end(), 0);
  std::stable_sort(branch_order_.begin(), branch_order_.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
}

std::optional<Witness> HubSetChecker::Find(HubMask mask) const {
  if (instance_->variant() == Variant::kV3) return FindCover(mask);
  if (instance_->allocation() == Allocation::kMulti) return FindMulti(mask);
  return FindSingle(mask);
}

std::optional<Witness> HubSetChecker::FindMulti(HubMask mask) const {
  MultiWitness witness;
  const auto& tasks = instance_->tasks();
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    bool found = false;
    for (const auto& [h, h2] : task_pairs_[t]) {
      if ((mask >> h & 1) && (mask >> h2 & 1)) {
        witness.tours[tasks[t]] = Tour{tasks[t].from, h, h2, tasks[t].to};
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return witness;
}

std::optional<Witness> HubSetChecker::FindCover(HubMask mask) const {
  CoverWitness witness;
  for (int b = 0; b < branches_; ++b) {
    const HubMask options = unary_[b] & mask;
    if (options == 0) return std::nullopt;
    witness.hub_of_branch[b] = std::countr_zero(options);
  }
  return witness;
}

std::optional<Witness> HubSetChecker::FindSingle(HubMask mask) const {
  std::vector<HubMask> domains(branches_);
  for (int b = 0; b < branches_; ++b) {
    domains[b] = unary_[b] & mask;
    if (domains[b] == 0) return std::nullopt;
  }
  std::vector<int> assignment(branches_, -1);
  if (!Backtrack(0, domains, assignment)) return std::nullopt;
  SingleWitness witness;
  for (int b = 0; b < branches_; ++b) witness.hub_of_branch[b] = assignment[b];
  return witness;
}

bool HubSetChecker::Backtrack(std::size_t depth, std::vector<HubMask>& domains,
                              std::vector<int>& assignment) const {
  if (depth == branch_order_.size()) return true;
  const int b = branch_order_[depth];
  for (HubMask options = domains[b]; options != 0; options &= options - 1) {
    const int h = std::countr_zero(options);
    std::vector<HubMask> next = domains;
    bool wiped = false;
    for (int c : neighbours_[b]) {
      if (assignment[c] >= 0) continue;
      next[c] &= compatible_[(static_cast<std::size_t>(b) * hubs_ + h) *
                                 branches_ +
                             c];
      if (next[c] == 0) {
        wiped = true;
        break;
      }
    }
    if (wiped) continue;
    next[b] = HubMask{1} << h;
    assignment[b] = h;
    if (Backtrack(depth + 1, next, assignment)) return true;
    assignment[b] = -1;
  }
  return false;
}

std::optional<Witness> FeasibleWithHubs(const HcpInstance& instance,
                                        std::span<const int> hubset) {
  for (int h : hubset) {
    if (h < 0 || h >= instance.hub_count()) {
      throw Error(ErrorCode::kInvalidInput, "hub index out of range");
    }
  }
  return HubSetChecker(instance).Find(MaskOf(hubset));
}

namespace {

struct Candidate {
  Rational cost;
  int size = 0;
  HubMask mask = 0;
  // Position in the cost-sorted hub order of the last hub added.
  int last = -1;
};

// True if a's hub set precedes b's: by cost, then size, then the sorted index
// sequence lexicographically.
bool Precedes(const Candidate& a, const Candidate& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.size != b.size) return a.size < b.size;
  if (a.mask == b.mask) return false;
  const HubMask diff = a.mask ^ b.mask;
  return (a.mask & (diff & (~diff + 1))) != 0;
}

struct Later {
  bool operator()(const Candidate& a, const Candidate& b) const {
    return Precedes(b, a);
  }
};

}  // namespace

OptimalResult SolveExact(const HcpInstance& instance,
                         const SolveOptions& options) {
  const int hubs = instance.hub_count();
  if (hubs > options.limits.max_hubs || hubs > kMaxMaskHubs) {
    throw Error(ErrorCode::kLimitExceeded,
                std::to_string(hubs) + " hubs exceed the limit of " +
                    std::to_string(options.limits.max_hubs));
  }
  if (IsSingleTaskVariant(instance) &&
      instance.branch_count() > options.limits.max_branches) {
    throw Error(ErrorCode::kLimitExceeded,
                std::to_string(instance.branch_count()) +
                    " branches exceed the single allocation limit of " +
                    std::to_string(options.limits.max_branches));
  }

  const HubSetChecker checker(instance);
  OptimalResult result;
  // Feasibility is monotone in the hub set, so the full set decides it.
  if (!checker.Feasible(AllHubs(hubs))) return result;

  // Hubs sorted by (cost, index). Every subset is generated exactly once from
  // its parent by either appending the next hub or replacing the last one by
  // the next; both moves strictly increase the (cost, size, lex) key, so the
  // heap pops subsets in that total order.
  std::vector<int> order(hubs);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.opening_cost(a) < instance.opening_cost(b);
  });
  const int cap = instance.capacity().value_or(hubs);

  std::priority_queue<Candidate, std::vector<Candidate>, Later> heap;
  heap.push(Candidate{});
  auto expand = [&](const Candidate& c) {
    const int next = c.last + 1;
    if (next >= hubs) return;
    const int hub = order[next];
    const HubMask bit = HubMask{1} << hub;
    if (c.size + 1 <= cap) {
      heap.push({c.cost + instance.opening_cost(hub), c.size + 1, c.mask | bit,
                 next});
    }
    if (c.last >= 0) {
      const int prev = order[c.last];
      heap.push({c.cost - instance.opening_cost(prev) +
                     instance.opening_cost(hub),
                 c.size, (c.mask & ~(HubMask{1} << prev)) | bit, next});
    }
  };

  const std::size_t batch_size = options.workers > 1 ? 64 : 1;
  std::vector<Candidate> batch;
  std::vector<std::optional<Witness>> found;
  while (!heap.empty()) {
    batch.clear();
    while (!heap.empty() && batch.size() < batch_size) {
      batch.push_back(heap.top());
      heap.pop();
      expand(batch.back());
    }
    found.assign(batch.size(), std::nullopt);
    ParallelFor(batch.size(), options.workers,
                [&](std::size_t i) { found[i] = checker.Find(batch[i].mask); });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!found[i]) continue;
      result.status = SolveStatus::kOptimal;
      result.solution =
          Solution::Make(instance, HubsOf(batch[i].mask), std::move(*found[i]));
      result.optimum = result.solution->cost();
      return result;
    }
  }
  return result;
}

std::optional<HubPair> PerTaskBestPair(const HcpInstance& instance,
                                       Task task) {
  if (instance.allocation() != Allocation::kMulti ||
      instance.variant() == Variant::kV3) {
    throw Error(ErrorCode::kWrongSetting,
                "per-task pairs apply to multi allocation variants 1 and 2");
  }
  std::optional<HubPair> best;
  for (int h = 0; h < instance.hub_count(); ++h) {
    for (int h2 = 0; h2 < instance.hub_count(); ++h2) {
      if (!TourFeasible(instance, {task.from, h, h2, task.to})) continue;
      Rational cost = instance.opening_cost(h);
      if (h2 != h) cost += instance.opening_cost(h2);
      if (!best || cost < best->cost) best = HubPair{h, h2, cost};
    }
  }
  return best;
}

}  // namespace hubcover
