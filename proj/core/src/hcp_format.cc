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

#include "hubcover/hcp_format.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hubcover/error.h"

namespace hubcover {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  for (std::string word; in >> word;) words.push_back(std::move(word));
  return words;
}

// Raw lines with 1-based numbers, '\r' stripped.
std::vector<std::pair<int, std::string_view>> RawLines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(++number, line);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return lines;
}

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  for (auto [number, raw] : RawLines(text)) {
    const auto hash = raw.find('#');
    auto tokens = SplitWords(raw.substr(0, hash));
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

[[noreturn]] void SyntaxError(int line, const std::string& message) {
  throw Error(ErrorCode::kSyntax, message, line);
}

void ExpectArity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    SyntaxError(line.number, "'" + line.tokens[0] + "' expects " +
                                 std::to_string(arity - 1) + " argument(s)");
  }
}

// Consumes the "<magic> 1" header.
std::vector<Line> BodyAfterHeader(std::string_view text,
                                  std::string_view magic) {
  std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) SyntaxError(1, "empty document, expected '" + std::string(magic) + " 1'");
  const Line& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != magic) {
    SyntaxError(head.number, "expected header '" + std::string(magic) + " 1'");
  }
  if (head.tokens[1] != "1") {
    SyntaxError(head.number, "unsupported format version " + head.tokens[1]);
  }
  lines.erase(lines.begin());
  return lines;
}

Rational RationalAt(const Line& line, std::size_t i) {
  try {
    return ParseRational(line.tokens[i]);
  } catch (const std::invalid_argument& e) {
    SyntaxError(line.number, e.what());
  }
}

int IntegerAt(const Line& line, std::size_t i) {
  const std::string& text = line.tokens[i];
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  SyntaxError(line.number, "not an integer: '" + text + "'");
}

// Remembers the line of a scalar key and rejects repeats.
class ScalarKeys {
 public:
  const Line* Take(const Line& line) {
    auto [it, inserted] = seen_.emplace(line.tokens[0], line);
    if (!inserted) {
      SyntaxError(line.number, "duplicate key '" + line.tokens[0] + "'");
    }
    return &it->second;
  }
  const Line* Find(const std::string& key) const {
    const auto it = seen_.find(key);
    return it == seen_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, Line> seen_;
};

void AppendSorted(std::string& out, std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
}

}  // namespace

DocumentKind SniffDocument(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) SyntaxError(1, "empty document");
  const std::string& magic = lines.front().tokens[0];
  if (magic == "hcpi") return DocumentKind::kInstance;
  if (magic == "hcps") return DocumentKind::kSolution;
  if (magic == "setcover") return DocumentKind::kSetCover;
  if (magic == "queens") return DocumentKind::kQueens;
  if (magic == "placement") return DocumentKind::kPlacement;
  if (magic == "cover") return DocumentKind::kCoverSelection;
  if (magic == "hcpm") return DocumentKind::kMapping;
  SyntaxError(lines.front().number, "unknown document header '" + magic + "'");
}

// --- hcpi -----------------------------------------------------------------

HcpInstance ParseInstance(std::string_view text) {
  const std::vector<Line> body = BodyAfterHeader(text, "hcpi");
  ScalarKeys scalars;
  std::vector<const Line*> dists, edges, tasks;
  InstanceData data;
  std::map<std::string, int> branch_lines, hub_lines;

  for (const Line& line : body) {
    const std::string& key = line.tokens[0];
    if (key == "variant" || key == "allocation" || key == "alpha" ||
        key == "phi" || key == "capacity") {
      ExpectArity(line, 2);
      scalars.Take(line);
    } else if (key == "branch") {
      ExpectArity(line, 2);
      if (!branch_lines.emplace(line.tokens[1], line.number).second) {
        SyntaxError(line.number, "duplicate branch '" + line.tokens[1] + "'");
      }
      data.branches.push_back(line.tokens[1]);
    } else if (key == "hub") {
      ExpectArity(line, 4);
      if (line.tokens[2] != "cost") {
        SyntaxError(line.number, "expected 'hub <name> cost <p/q>'");
      }
      if (!hub_lines.emplace(line.tokens[1], line.number).second) {
        SyntaxError(line.number, "duplicate hub '" + line.tokens[1] + "'");
      }
      data.hubs.push_back(line.tokens[1]);
      data.opening_costs.push_back(RationalAt(line, 3));
    } else if (key == "dist") {
      ExpectArity(line, 4);
      dists.push_back(&line);
    } else if (key == "edge") {
      ExpectArity(line, 3);
      edges.push_back(&line);
    } else if (key == "task") {
      ExpectArity(line, 3);
      tasks.push_back(&line);
    } else {
      SyntaxError(line.number, "unknown key '" + key + "'");
    }
  }

  const Line* variant = scalars.Find("variant");
  if (variant == nullptr) SyntaxError(0, "missing required key 'variant'");
  const std::string& v = variant->tokens[1];
  if (v == "v1") {
    data.variant = Variant::kV1;
  } else if (v == "v2") {
    data.variant = Variant::kV2;
  } else if (v == "v3") {
    data.variant = Variant::kV3;
  } else {
    SyntaxError(variant->number, "variant must be v1, v2 or v3");
  }
  const bool v3 = data.variant == Variant::kV3;

  if (const Line* alloc = scalars.Find("allocation")) {
    const std::string& a = alloc->tokens[1];
    if (a == "single") {
      data.allocation = Allocation::kSingle;
    } else if (a == "multi") {
      data.allocation = Allocation::kMulti;
    } else {
      SyntaxError(alloc->number, "allocation must be single or multi");
    }
  } else if (v3) {
    data.allocation = Allocation::kSingle;
  } else {
    SyntaxError(0, "missing required key 'allocation'");
  }
  if (const Line* alpha = scalars.Find("alpha")) {
    data.alpha = RationalAt(*alpha, 1);
  } else if (!v3) {
    SyntaxError(0, "missing required key 'alpha'");
  }
  if (const Line* phi = scalars.Find("phi")) {
    if (data.variant != Variant::kV1) {
      SyntaxError(phi->number, "'phi' applies to variant v1 only; v2/v3 "
                               "thresholds are encoded as edges");
    }
    data.phi = RationalAt(*phi, 1);
  } else if (data.variant == Variant::kV1) {
    SyntaxError(0, "missing required key 'phi'");
  }
  if (const Line* capacity = scalars.Find("capacity")) {
    data.capacity = IntegerAt(*capacity, 1);
  }

  const int branches = static_cast<int>(data.branches.size());
  const int hubs = static_cast<int>(data.hubs.size());
  std::map<std::string, int> vertex;
  for (int b = 0; b < branches; ++b) vertex[data.branches[b]] = b;
  for (int h = 0; h < hubs; ++h) {
    if (!vertex.emplace(data.hubs[h], branches + h).second) {
      SyntaxError(hub_lines[data.hubs[h]],
                  "'" + data.hubs[h] + "' is both a branch and a hub");
    }
  }
  auto vertex_at = [&](const Line& line, std::size_t i) {
    const auto it = vertex.find(line.tokens[i]);
    if (it == vertex.end()) {
      SyntaxError(line.number, "unknown vertex '" + line.tokens[i] + "'");
    }
    return it->second;
  };

  if (data.variant == Variant::kV1) {
    if (!edges.empty()) {
      SyntaxError(edges.front()->number, "'edge' lines require v2 or v3");
    }
    MetricMatrix metric(branches + hubs);
    std::set<std::pair<int, int>> seen;
    for (const Line* line : dists) {
      int u = vertex_at(*line, 1);
      int w = vertex_at(*line, 2);
      if (u == w) SyntaxError(line->number, "dist of a vertex to itself");
      if (u > w) std::swap(u, w);
      if (!seen.emplace(u, w).second) {
        SyntaxError(line->number, "duplicate dist for this vertex pair");
      }
      metric.Set(u, w, RationalAt(*line, 3));
    }
    auto name = [&](int u) {
      return u < branches ? data.branches[u] : data.hubs[u - branches];
    };
    for (int u = 0; u < branches + hubs; ++u) {
      for (int w = u + 1; w < branches + hubs; ++w) {
        if (!seen.count({u, w})) {
          SyntaxError(0, "missing dist " + name(u) + " " + name(w) +
                             " (v1 needs every vertex pair)");
        }
      }
    }
    data.geometry = std::move(metric);
  } else {
    if (!dists.empty()) {
      SyntaxError(dists.front()->number, "'dist' lines require v1");
    }
    AdjacencyGraph graph(branches, hubs);
    for (const Line* line : edges) {
      int u = vertex_at(*line, 1);
      int w = vertex_at(*line, 2);
      if (u > w) std::swap(u, w);
      if (w < branches) {
        SyntaxError(line->number, "branch-branch edges are not allowed");
      }
      if (u < branches) {
        graph.AddBranchHubEdge(u, w - branches);
      } else {
        if (u == w) SyntaxError(line->number, "hub self loop");
        graph.AddHubHubEdge(u - branches, w - branches);
      }
    }
    data.geometry = std::move(graph);
  }

  for (const Line* line : tasks) {
    const int from = vertex_at(*line, 1);
    const int to = vertex_at(*line, 2);
    if (from >= branches || to >= branches) {
      SyntaxError(line->number, "task endpoints must be branches");
    }
    data.tasks.push_back({from, to});
  }
  return HcpInstance::Build(std::move(data));
}

std::string SerializeInstance(const HcpInstance& instance) {
  std::string out = "hcpi 1\n";
  out += "variant " + std::string(VariantName(instance.variant())) + "\n";
  out += "allocation " + std::string(AllocationName(instance.allocation())) +
         "\n";
  out += "alpha " + FormatRational(instance.alpha()) + "\n";
  if (instance.variant() == Variant::kV1) {
    out += "phi " + FormatRational(instance.phi()) + "\n";
  }
  if (instance.capacity()) {
    out += "capacity " + std::to_string(*instance.capacity()) + "\n";
  }
  for (int b = 0; b < instance.branch_count(); ++b) {
    out += "branch " + instance.branch_name(b) + "\n";
  }
  for (int h = 0; h < instance.hub_count(); ++h) {
    out += "hub " + instance.hub_name(h) + " cost " +
           FormatRational(instance.opening_cost(h)) + "\n";
  }
  const int branches = instance.branch_count();
  const int hubs = instance.hub_count();
  auto name = [&](int u) {
    return u < branches ? instance.branch_name(u)
                        : instance.hub_name(u - branches);
  };
  std::vector<std::string> lines;
  if (instance.variant() == Variant::kV1) {
    const MetricMatrix& d = instance.metric();
    for (int u = 0; u < branches + hubs; ++u) {
      for (int w = u + 1; w < branches + hubs; ++w) {
        lines.push_back("dist " + name(u) + " " + name(w) + " " +
                        FormatRational(d.at(u, w)));
      }
    }
  } else {
    const AdjacencyGraph& g = instance.graph();
    for (int b = 0; b < branches; ++b) {
      for (int h = 0; h < hubs; ++h) {
        if (g.BranchHub(b, h)) {
          lines.push_back("edge " + instance.branch_name(b) + " " +
                          instance.hub_name(h));
        }
      }
    }
    for (int h = 0; h < hubs; ++h) {
      for (int h2 = h + 1; h2 < hubs; ++h2) {
        if (g.HubHub(h, h2)) {
          lines.push_back("edge " + instance.hub_name(h) + " " +
                          instance.hub_name(h2));
        }
      }
    }
  }
  AppendSorted(out, std::move(lines));
  lines.clear();
  for (const Task& task : instance.tasks()) {
    lines.push_back("task " + instance.branch_name(task.from) + " " +
                    instance.branch_name(task.to));
  }
  AppendSorted(out, std::move(lines));
  return out;
}

// --- hcps -----------------------------------------------------------------

Solution ParseSolution(const HcpInstance& instance, std::string_view text) {
  const std::vector<Line> body = BodyAfterHeader(text, "hcps");
  const WitnessKind kind = ExpectedWitnessKind(instance);
  auto branch_at = [&](const Line& line, std::size_t i) {
    const auto b = instance.FindBranch(line.tokens[i]);
    if (!b) SyntaxError(line.number, "unknown branch '" + line.tokens[i] + "'");
    return *b;
  };
  auto hub_at = [&](const Line& line, std::size_t i) {
    const auto h = instance.FindHub(line.tokens[i]);
    if (!h) SyntaxError(line.number, "unknown hub '" + line.tokens[i] + "'");
    return *h;
  };

  std::vector<int> open;
  std::map<Task, Tour> tours;
  std::map<int, int> allocation;
  const Line* cost = nullptr;
  for (const Line& line : body) {
    const std::string& key = line.tokens[0];
    if (key == "cost") {
      ExpectArity(line, 2);
      if (cost != nullptr) SyntaxError(line.number, "duplicate key 'cost'");
      cost = &line;
    } else if (key == "open") {
      ExpectArity(line, 2);
      open.push_back(hub_at(line, 1));
    } else if (key == "tour") {
      ExpectArity(line, 5);
      if (kind != WitnessKind::kMulti) {
        SyntaxError(line.number,
                    "'tour' lines need a multi allocation v1/v2 instance");
      }
      const Tour tour{branch_at(line, 1), hub_at(line, 2), hub_at(line, 3),
                      branch_at(line, 4)};
      if (!tours.emplace(Task{tour.b, tour.b2}, tour).second) {
        SyntaxError(line.number, "second tour for the same task");
      }
    } else if (key == "assign") {
      ExpectArity(line, 3);
      if (kind == WitnessKind::kMulti) {
        SyntaxError(line.number,
                    "'assign' lines need a single allocation or v3 instance");
      }
      if (!allocation.emplace(branch_at(line, 1), hub_at(line, 2)).second) {
        SyntaxError(line.number, "branch assigned twice");
      }
    } else {
      SyntaxError(line.number, "unknown key '" + key + "'");
    }
  }
  Witness witness;
  switch (kind) {
    case WitnessKind::kMulti: witness = MultiWitness{std::move(tours)}; break;
    case WitnessKind::kSingle:
      witness = SingleWitness{std::move(allocation)};
      break;
    case WitnessKind::kCover: witness = CoverWitness{std::move(allocation)}; break;
  }
  Solution solution = Solution::Make(instance, std::move(open), std::move(witness));
  if (cost != nullptr && RationalAt(*cost, 1) != solution.cost()) {
    throw Error(ErrorCode::kSemantic,
                "stated cost " + cost->tokens[1] +
                    " differs from the opening cost " +
                    FormatRational(solution.cost()) + " of the open hubs",
                cost->number);
  }
  return solution;
}

std::string SerializeSolution(const HcpInstance& instance,
                              const Solution& solution) {
  std::string out = "hcps 1\n";
  out += "cost " + FormatRational(solution.cost()) + "\n";
  std::vector<std::string> lines;
  for (int h : solution.open_hubs()) {
    lines.push_back("open " + instance.hub_name(h));
  }
  AppendSorted(out, std::move(lines));
  lines.clear();
  if (const auto* multi = std::get_if<MultiWitness>(&solution.witness())) {
    for (const auto& [task, tour] : multi->tours) {
      lines.push_back("tour " + instance.branch_name(tour.b) + " " +
                      instance.hub_name(tour.h) + " " +
                      instance.hub_name(tour.h2) + " " +
                      instance.branch_name(tour.b2));
    }
  } else {
    const auto& alloc =
        std::holds_alternative<SingleWitness>(solution.witness())
            ? std::get<SingleWitness>(solution.witness()).hub_of_branch
            : std::get<CoverWitness>(solution.witness()).hub_of_branch;
    for (const auto& [b, h] : alloc) {
      lines.push_back("assign " + instance.branch_name(b) + " " +
                      instance.hub_name(h));
    }
  }
  AppendSorted(out, std::move(lines));
  return out;
}

// --- set cover --------------------------------------------------------------

SetCoverInstance ParseSetCover(std::string_view text) {
  const std::vector<Line> body = BodyAfterHeader(text, "setcover");
  std::vector<std::string> elements;
  std::map<std::string, int> element_index;
  std::vector<const Line*> set_lines;
  for (const Line& line : body) {
    if (line.tokens[0] == "element") {
      ExpectArity(line, 2);
      if (!element_index.emplace(line.tokens[1], elements.size()).second) {
        SyntaxError(line.number, "duplicate element '" + line.tokens[1] + "'");
      }
      elements.push_back(line.tokens[1]);
    } else if (line.tokens[0] == "set") {
      if (line.tokens.size() < 5 || line.tokens[2] != "weight" ||
          line.tokens[4] != "covers") {
        SyntaxError(line.number,
                    "expected 'set <name> weight <p/q> covers <element>...'");
      }
      set_lines.push_back(&line);
    } else {
      SyntaxError(line.number, "unknown key '" + line.tokens[0] + "'");
    }
  }
  std::vector<WeightedSet> sets;
  for (const Line* line : set_lines) {
    WeightedSet set{line->tokens[1], RationalAt(*line, 3), {}};
    for (std::size_t i = 5; i < line->tokens.size(); ++i) {
      const auto it = element_index.find(line->tokens[i]);
      if (it == element_index.end()) {
        SyntaxError(line->number, "unknown element '" + line->tokens[i] + "'");
      }
      set.members.push_back(it->second);
    }
    sets.push_back(std::move(set));
  }
  return SetCoverInstance::Build(std::move(elements), std::move(sets));
}

std::string SerializeSetCover(const SetCoverInstance& instance) {
  std::string out = "setcover 1\n";
  for (const auto& element : instance.elements()) {
    out += "element " + element + "\n";
  }
  for (const auto& set : instance.sets()) {
    out += "set " + set.name + " weight " + FormatRational(set.weight) +
           " covers";
    for (int e : set.members) out += " " + instance.elements()[e];
    out += "\n";
  }
  return out;
}

// --- queens -----------------------------------------------------------------

namespace {

std::pair<std::optional<int>, std::vector<Square>> ParseBoardLines(
    const std::vector<Line>& body) {
  std::optional<int> n;
  std::vector<Square> queens;
  for (const Line& line : body) {
    if (line.tokens[0] == "n") {
      ExpectArity(line, 2);
      if (n) SyntaxError(line.number, "duplicate key 'n'");
      n = IntegerAt(line, 1);
    } else if (line.tokens[0] == "queen") {
      ExpectArity(line, 3);
      queens.push_back({IntegerAt(line, 1), IntegerAt(line, 2)});
    } else {
      SyntaxError(line.number, "unknown key '" + line.tokens[0] + "'");
    }
  }
  return {n, std::move(queens)};
}

std::string BoardLines(std::vector<Square> queens) {
  std::sort(queens.begin(), queens.end());
  std::string out;
  for (const Square& s : queens) {
    out += "queen " + std::to_string(s.row) + " " + std::to_string(s.col) + "\n";
  }
  return out;
}

}  // namespace

QueensInstance ParseQueens(std::string_view text) {
  auto [n, queens] = ParseBoardLines(BodyAfterHeader(text, "queens"));
  if (!n) SyntaxError(0, "missing required key 'n'");
  return QueensInstance::Build(*n, std::move(queens));
}

std::string SerializeQueens(const QueensInstance& instance) {
  return "queens 1\nn " + std::to_string(instance.n()) + "\n" +
         BoardLines(instance.placed());
}

QueensPlacement ParsePlacement(std::string_view text) {
  auto [n, queens] = ParseBoardLines(BodyAfterHeader(text, "placement"));
  std::sort(queens.begin(), queens.end());
  if (n && *n != static_cast<int>(queens.size())) {
    SyntaxError(0, "placement lists " + std::to_string(queens.size()) +
                       " queens for n = " + std::to_string(*n));
  }
  return QueensPlacement{std::move(queens)};
}

std::string SerializePlacement(const QueensPlacement& placement) {
  return "placement 1\nn " + std::to_string(placement.queens.size()) + "\n" +
         BoardLines(placement.queens);
}

// --- cover selection --------------------------------------------------------

CoverSelection ParseCoverSelection(const SetCoverInstance& instance,
                                   std::string_view text) {
  const std::vector<Line> body = BodyAfterHeader(text, "cover");
  std::map<std::string, int> index;
  for (int s = 0; s < instance.set_count(); ++s) {
    index[instance.sets()[s].name] = s;
  }
  CoverSelection selection;
  const Line* weight = nullptr;
  for (const Line& line : body) {
    if (line.tokens[0] == "weight") {
      ExpectArity(line, 2);
      if (weight != nullptr) SyntaxError(line.number, "duplicate key 'weight'");
      weight = &line;
    } else if (line.tokens[0] == "choose") {
      ExpectArity(line, 2);
      const auto it = index.find(line.tokens[1]);
      if (it == index.end()) {
        SyntaxError(line.number, "unknown set '" + line.tokens[1] + "'");
      }
      selection.sets.push_back(it->second);
    } else {
      SyntaxError(line.number, "unknown key '" + line.tokens[0] + "'");
    }
  }
  std::sort(selection.sets.begin(), selection.sets.end());
  selection.sets.erase(
      std::unique(selection.sets.begin(), selection.sets.end()),
      selection.sets.end());
  if (weight != nullptr &&
      RationalAt(*weight, 1) != SelectionWeight(instance, selection.sets)) {
    throw Error(ErrorCode::kSemantic, "stated weight differs from the chosen sets",
                weight->number);
  }
  return selection;
}

std::string SerializeCoverSelection(const SetCoverInstance& instance,
                                    const CoverSelection& selection) {
  std::string out = "cover 1\nweight " +
                    FormatRational(SelectionWeight(instance, selection.sets)) +
                    "\n";
  for (int s : selection.sets) out += "choose " + instance.sets()[s].name + "\n";
  return out;
}

// --- digests ----------------------------------------------------------------

std::string SerializeProblem(const SourceProblem& problem) {
  return std::visit(
      [](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HcpInstance>) {
          return SerializeInstance(p);
        } else if constexpr (std::is_same_v<P, SetCoverInstance>) {
          return SerializeSetCover(p);
        } else {
          return SerializeQueens(p);
        }
      },
      problem);
}

std::string ContentDigest(std::string_view canonical_text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

std::string ProblemDigest(const SourceProblem& problem) {
  return ContentDigest(SerializeProblem(problem));
}

// --- mapping sidecar --------------------------------------------------------

namespace {

std::string TargetText(const TargetProblem& target) {
  if (const auto* hcp = std::get_if<HcpInstance>(&target)) {
    return SerializeInstance(*hcp);
  }
  return SerializeSetCover(std::get<SetCoverInstance>(target));
}

void AppendBlock(std::string& out, std::string_view name,
                 const std::string& body) {
  out += "begin " + std::string(name) + "\n" + body + "end " +
         std::string(name) + "\n";
}

}  // namespace

std::string SerializeRecord(const ReductionRecord& record) {
  std::string out = "hcpm 1\n";
  out += "kind " + std::string(ReductionKindName(record.kind)) + "\n";
  out += "source-digest " + record.source_digest + "\n";
  const auto* source_hcp = std::get_if<HcpInstance>(&record.source);
  const auto* source_cover = std::get_if<SetCoverInstance>(&record.source);
  if (record.b0) out += "b0 " + source_hcp->branch_name(*record.b0) + "\n";

  if (const auto* target = std::get_if<HcpInstance>(&record.target)) {
    for (int b = 0; b < target->branch_count(); ++b) {
      const int s = record.branch_map[b];
      if (source_hcp != nullptr) {
        out += "map-branch " + target->branch_name(b) + " " +
               source_hcp->branch_name(s) + "\n";
      } else if (source_cover != nullptr) {
        out += "map-branch " + target->branch_name(b) + " " +
               source_cover->elements()[s] + "\n";
      } else {
        out += "map-row " + target->branch_name(b) + " " + std::to_string(s) +
               "\n";
      }
    }
    for (int h = 0; h < target->hub_count(); ++h) {
      const int s = record.hub_map[h];
      if (source_hcp != nullptr) {
        out += "map-hub " + target->hub_name(h) + " " +
               source_hcp->hub_name(s) + "\n";
      } else if (source_cover != nullptr) {
        out += "map-hub " + target->hub_name(h) + " " +
               source_cover->sets()[s].name + "\n";
      } else {
        const int n = std::get<QueensInstance>(record.source).n();
        out += "map-square " + target->hub_name(h) + " " +
               std::to_string(s / n + 1) + " " + std::to_string(s % n + 1) +
               "\n";
      }
    }
  } else {
    const auto& cover = std::get<SetCoverInstance>(record.target);
    for (int e = 0; e < cover.element_count(); ++e) {
      out += "map-element " + cover.elements()[e] + " " +
             source_hcp->branch_name(record.branch_map[e]) + "\n";
    }
    for (int s = 0; s < cover.set_count(); ++s) {
      out += "map-set " + cover.sets()[s].name + " " +
             source_hcp->hub_name(record.hub_map[s]) + "\n";
    }
  }
  AppendBlock(out, "source", SerializeProblem(record.source));
  AppendBlock(out, "target", TargetText(record.target));
  return out;
}

ReductionRecord ParseRecord(std::string_view text) {
  // Pull out the embedded documents before tokenizing the rest.
  std::string outer;
  std::map<std::string, std::string> blocks;
  std::string open_block;
  int open_line = 0;
  for (auto [number, raw] : RawLines(text)) {
    const auto words = SplitWords(raw);
    if (open_block.empty()) {
      if (words.size() == 2 && words[0] == "begin") {
        if (words[1] != "source" && words[1] != "target") {
          SyntaxError(number, "unknown block '" + words[1] + "'");
        }
        if (blocks.count(words[1])) {
          SyntaxError(number, "duplicate block '" + words[1] + "'");
        }
        open_block = words[1];
        open_line = number;
        blocks[open_block];
        outer += "\n";
      } else {
        outer += std::string(raw) + "\n";
      }
    } else if (words.size() == 2 && words[0] == "end" &&
               words[1] == open_block) {
      open_block.clear();
      outer += "\n";
    } else {
      blocks[open_block] += std::string(raw) + "\n";
      outer += "\n";
    }
  }
  if (!open_block.empty()) {
    SyntaxError(open_line, "block '" + open_block + "' is never closed");
  }
  if (!blocks.count("source") || !blocks.count("target")) {
    SyntaxError(0, "mapping needs 'begin source' and 'begin target' blocks");
  }

  const std::vector<Line> body = BodyAfterHeader(outer, "hcpm");
  ScalarKeys scalars;
  std::vector<const Line*> maps;
  for (const Line& line : body) {
    const std::string& key = line.tokens[0];
    if (key == "kind" || key == "source-digest" || key == "b0") {
      ExpectArity(line, 2);
      scalars.Take(line);
    } else if (key == "map-branch" || key == "map-hub" || key == "map-row" ||
               key == "map-element" || key == "map-set") {
      ExpectArity(line, 3);
      maps.push_back(&line);
    } else if (key == "map-square") {
      ExpectArity(line, 4);
      maps.push_back(&line);
    } else {
      SyntaxError(line.number, "unknown key '" + key + "'");
    }
  }
  const Line* kind_line = scalars.Find("kind");
  const Line* digest_line = scalars.Find("source-digest");
  if (kind_line == nullptr) SyntaxError(0, "missing required key 'kind'");
  if (digest_line == nullptr) {
    SyntaxError(0, "missing required key 'source-digest'");
  }
  const auto kind = ParseReductionKind(kind_line->tokens[1]);
  if (!kind) {
    SyntaxError(kind_line->number,
                "unknown reduction kind '" + kind_line->tokens[1] + "'");
  }

  auto parse_source = [&]() -> SourceProblem {
    switch (*kind) {
      case ReductionKind::kSetCoverToV3: return ParseSetCover(blocks["source"]);
      case ReductionKind::kQueensToSa2: return ParseQueens(blocks["source"]);
      default: return ParseInstance(blocks["source"]);
    }
  };
  auto parse_target = [&]() -> TargetProblem {
    if (*kind == ReductionKind::kV3ToSetCover) {
      return ParseSetCover(blocks["target"]);
    }
    return ParseInstance(blocks["target"]);
  };
  ReductionRecord record{*kind, {}, parse_source(), parse_target(), {}, {}, {}};
  record.source_digest = digest_line->tokens[1];
  if (ProblemDigest(record.source) != record.source_digest) {
    throw Error(ErrorCode::kSemantic,
                "embedded source does not match source-digest",
                digest_line->number);
  }

  const auto* source_hcp = std::get_if<HcpInstance>(&record.source);
  const auto* source_cover = std::get_if<SetCoverInstance>(&record.source);
  if (const Line* b0 = scalars.Find("b0")) {
    if (source_hcp == nullptr || !source_hcp->FindBranch(b0->tokens[1])) {
      SyntaxError(b0->number, "b0 must name a source branch");
    }
    record.b0 = *source_hcp->FindBranch(b0->tokens[1]);
  }

  // Source lookups by name.
  auto source_branch = [&](const Line& line) -> int {
    const std::string& name = line.tokens[2];
    if (source_hcp != nullptr) {
      if (auto b = source_hcp->FindBranch(name)) return *b;
    } else if (source_cover != nullptr) {
      const auto& e = source_cover->elements();
      const auto it = std::find(e.begin(), e.end(), name);
      if (it != e.end()) return static_cast<int>(it - e.begin());
    }
    SyntaxError(line.number, "unknown source branch '" + name + "'");
  };
  auto source_hub = [&](const Line& line) -> int {
    const std::string& name = line.tokens[2];
    if (source_hcp != nullptr) {
      if (auto h = source_hcp->FindHub(name)) return *h;
    } else if (source_cover != nullptr) {
      for (int s = 0; s < source_cover->set_count(); ++s) {
        if (source_cover->sets()[s].name == name) return s;
      }
    }
    SyntaxError(line.number, "unknown source hub '" + name + "'");
  };

  int target_branches = 0;
  int target_hubs = 0;
  std::map<std::string, int> branch_of, hub_of;
  if (const auto* t = std::get_if<HcpInstance>(&record.target)) {
    target_branches = t->branch_count();
    target_hubs = t->hub_count();
    for (int b = 0; b < target_branches; ++b) branch_of[t->branch_name(b)] = b;
    for (int h = 0; h < target_hubs; ++h) hub_of[t->hub_name(h)] = h;
  } else {
    const auto& cover = std::get<SetCoverInstance>(record.target);
    target_branches = cover.element_count();
    target_hubs = cover.set_count();
    for (int e = 0; e < target_branches; ++e) branch_of[cover.elements()[e]] = e;
    for (int s = 0; s < target_hubs; ++s) hub_of[cover.sets()[s].name] = s;
  }
  record.branch_map.assign(target_branches, -1);
  record.hub_map.assign(target_hubs, -1);
  for (const Line* line : maps) {
    const std::string& key = line->tokens[0];
    const bool branch_side =
        key == "map-branch" || key == "map-row" || key == "map-element";
    auto& lookup = branch_side ? branch_of : hub_of;
    const auto it = lookup.find(line->tokens[1]);
    if (it == lookup.end()) {
      SyntaxError(line->number, "unknown target name '" + line->tokens[1] + "'");
    }
    int value = 0;
    if (key == "map-row") {
      value = IntegerAt(*line, 2);
    } else if (key == "map-square") {
      const int n = std::get<QueensInstance>(record.source).n();
      value = (IntegerAt(*line, 2) - 1) * n + (IntegerAt(*line, 3) - 1);
    } else if (branch_side) {
      value = source_branch(*line);
    } else {
      value = source_hub(*line);
    }
    (branch_side ? record.branch_map : record.hub_map)[it->second] = value;
  }
  const bool total =
      std::find(record.branch_map.begin(), record.branch_map.end(), -1) ==
          record.branch_map.end() &&
      std::find(record.hub_map.begin(), record.hub_map.end(), -1) ==
          record.hub_map.end();
  if (!total) {
    throw Error(ErrorCode::kSemantic,
                "mapping tables do not cover every target branch and hub");
  }
  return record;
}

}  // namespace hubcover
