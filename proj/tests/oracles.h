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

#ifndef HUBCOVER_TESTS_ORACLES_H_
#define HUBCOVER_TESTS_ORACLES_H_

// Naive reference implementations. They share no code with the library's
// solvers: every hub subset and every allocation is enumerated directly.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "hubcover/instance.h"
#include "hubcover/queens.h"
#include "hubcover/rational.h"
#include "hubcover/set_cover.h"

namespace hubcover::oracle {

inline bool Leg(const HcpInstance& in, int u, int w) {
  const int branches = in.branch_count();
  const AdjacencyGraph& g = in.graph();
  if (u < branches && w < branches) return false;
  if (u < branches) return g.BranchHub(u, w - branches);
  if (w < branches) return g.BranchHub(w, u - branches);
  return g.HubHub(u - branches, w - branches);
}

// Tour b -> h -> h2 -> b2 straight from the definitions.
inline bool TourOk(const HcpInstance& in, int b, int h, int h2, int b2) {
  const int hv = in.branch_count() + h;
  const int hv2 = in.branch_count() + h2;
  if (in.variant() == Variant::kV1) {
    const MetricMatrix& d = in.metric();
    const Rational hub_leg = h == h2 ? Rational(0) : d.at(hv, hv2);
    return d.at(b, hv) + in.alpha() * hub_leg + d.at(hv2, b2) <= in.phi();
  }
  const bool hub_leg = h == h2 || in.alpha() == 0 || Leg(in, hv, hv2);
  return Leg(in, b, hv) && hub_leg && Leg(in, hv2, b2);
}

inline std::vector<int> Members(std::uint64_t mask, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

inline bool FeasibleSet(const HcpInstance& in, std::uint64_t mask) {
  const std::vector<int> open = Members(mask, in.hub_count());
  if (in.capacity() && static_cast<int>(open.size()) > *in.capacity()) {
    return false;
  }
  const int branches = in.branch_count();
  if (in.variant() == Variant::kV3) {
    for (int b = 0; b < branches; ++b) {
      if (std::none_of(open.begin(), open.end(),
                       [&](int h) { return in.graph().BranchHub(b, h); })) {
        return false;
      }
    }
    return true;
  }
  if (in.allocation() == Allocation::kMulti) {
    for (const Task& t : in.tasks()) {
      bool served = false;
      for (int h : open) {
        for (int h2 : open) served = served || TourOk(in, t.from, h, h2, t.to);
      }
      if (!served) return false;
    }
    return true;
  }
  // Single allocation: every branch needs an open hub, so odometer over all
  // |open|^|B| allocations.
  if (branches > 0 && open.empty()) return false;
  std::vector<int> digit(branches, 0);
  while (true) {
    bool ok = true;
    for (int b = 0; b < branches && ok; ++b) {
      if (in.variant() == Variant::kV2 && !in.graph().BranchHub(b, open[digit[b]])) {
        ok = false;
      }
    }
    for (const Task& t : in.tasks()) {
      if (!ok) break;
      ok = TourOk(in, t.from, open[digit[t.from]], open[digit[t.to]], t.to);
    }
    if (ok) return true;
    int i = 0;
    while (i < branches && ++digit[i] == static_cast<int>(open.size())) {
      digit[i++] = 0;
    }
    if (i == branches) return false;
  }
}

inline std::optional<Rational> Optimum(const HcpInstance& in) {
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << in.hub_count());
       ++mask) {
    Rational cost = 0;
    for (int h : Members(mask, in.hub_count())) cost += in.opening_cost(h);
    if (best && cost >= *best) continue;
    if (FeasibleSet(in, mask)) best = cost;
  }
  return best;
}

inline std::optional<Rational> SetCoverOptimum(const SetCoverInstance& sc) {
  std::optional<Rational> best;
  const int sets = sc.set_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets); ++mask) {
    std::vector<char> hit(sc.element_count(), 0);
    Rational weight = 0;
    for (int s : Members(mask, sets)) {
      weight += sc.sets()[s].weight;
      for (int e : sc.sets()[s].members) hit[e] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) continue;
    if (!best || weight < *best) best = weight;
  }
  return best;
}

// Tries every permutation of columns.
inline bool QueensCompletable(const QueensInstance& q) {
  std::vector<int> col(q.n());
  std::iota(col.begin(), col.end(), 1);
  do {
    bool ok = true;
    for (const Square& s : q.placed()) ok = ok && col[s.row - 1] == s.col;
    for (int r = 0; r < q.n() && ok; ++r) {
      for (int r2 = r + 1; r2 < q.n() && ok; ++r2) {
        ok = std::abs(col[r] - col[r2]) != r2 - r;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(col.begin(), col.end()));
  return false;
}

}  // namespace hubcover::oracle

#endif  // HUBCOVER_TESTS_ORACLES_H_
