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

#include "cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hubcover/approx.h"
#include "hubcover/bench.h"
#include "hubcover/error.h"
#include "hubcover/exact_solver.h"
#include "hubcover/feasibility.h"
#include "hubcover/generator.h"
#include "hubcover/hcp_format.h"
#include "hubcover/reductions.h"

namespace hubcover::cli {
namespace {

// Failure that maps straight to an exit code.
struct ExitError : std::runtime_error {
  ExitError(int code, const std::string& message)
      : std::runtime_error(message), code(code) {}
  int code;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError(kExitUsage, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ExitError(kExitUsage, "cannot write " + path);
}

// Writes to `path`, or to `out` when the path is empty.
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasible:
    case ErrorCode::kUnliftableWitness:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

std::string HubList(const HcpInstance& instance, const Solution& solution) {
  std::string list;
  for (int h : solution.open_hubs()) list += " " + instance.hub_name(h);
  return list;
}

void PrintNotes(const HcpInstance& instance, std::ostream& err) {
  for (const auto& note : instance.Notes()) err << "note: " << note << "\n";
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string file;
  std::string algo = "exact";
  int k = 2;
  std::string out;
  int workers = 1;
};

int Solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const std::string text = ReadFile(args.file);
  if (SniffDocument(text) != DocumentKind::kInstance) {
    throw ExitError(kExitUsage, "solve expects an hcpi instance file");
  }
  const HcpInstance instance = ParseInstance(text);
  PrintNotes(instance, err);

  std::optional<Solution> solution;
  std::string status = "feasible";
  if (args.algo == "exact") {
    const SolveOptions options{SolverLimits::FromEnvironment(), args.workers};
    OptimalResult result = SolveExact(instance, options);
    if (result.status == SolveStatus::kInfeasible) {
      throw Error(ErrorCode::kInfeasible, "no hub set admits a feasible solution");
    }
    solution = std::move(result.solution);
    status = "optimal";
  } else if (args.algo == "taskwise") {
    solution = ApproxTaskwise(instance, args.workers);
  } else if (args.algo == "bounded-enum") {
    solution = ApproxBoundedEnumeration(instance, args.k);
  } else {
    solution = SolveVariant3Greedy(instance);
  }
  out << "status " << status << "\n";
  out << "cost " << FormatRational(solution->cost()) << "\n";
  out << "open" << HubList(instance, *solution) << "\n";
  if (!args.out.empty()) {
    WriteFile(args.out, SerializeSolution(instance, *solution));
  }
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

int Verify(const std::string& problem_path, const std::string& solution_path,
           std::ostream& out) {
  const std::string problem = ReadFile(problem_path);
  const std::string answer = ReadFile(solution_path);
  switch (SniffDocument(problem)) {
    case DocumentKind::kInstance: {
      const HcpInstance instance = ParseInstance(problem);
      const Solution solution = ParseSolution(instance, answer);
      const VerificationReport report = VerifySolution(instance, solution);
      out << report.ToString();
      if (report.ok()) {
        out << "cost " << FormatRational(solution.cost()) << "\n";
      }
      return report.ok() ? kExitOk : kExitFailure;
    }
    case DocumentKind::kSetCover: {
      const SetCoverInstance cover = ParseSetCover(problem);
      const CoverSelection selection = ParseCoverSelection(cover, answer);
      const bool ok = IsCover(cover, selection.sets);
      out << (ok ? "ok" : "violated: some element is not covered") << "\n";
      if (ok) {
        out << "weight "
            << FormatRational(SelectionWeight(cover, selection.sets)) << "\n";
      }
      return ok ? kExitOk : kExitFailure;
    }
    case DocumentKind::kQueens: {
      const QueensInstance board = ParseQueens(problem);
      const bool ok = IsValidCompletion(board, ParsePlacement(answer));
      out << (ok ? "ok" : "violated: not a completion of the board") << "\n";
      return ok ? kExitOk : kExitFailure;
    }
    default:
      throw ExitError(kExitUsage,
                      "verify expects an hcpi, setcover or queens problem");
  }
}

// --- reduce -----------------------------------------------------------------

struct ReduceArgs {
  std::string file;
  std::string to;
  std::string b0;
  std::string allocation = "single";
  std::string out;
};

int Reduce(const ReduceArgs& args, std::ostream& out) {
  const std::string text = ReadFile(args.file);
  const DocumentKind kind = SniffDocument(text);
  auto mismatch = [&](const std::string& wanted) {
    return ExitError(kExitUsage, "--to " + args.to + " needs " + wanted);
  };
  std::optional<ReductionRecord> record;
  if (args.to == "queens-sa2") {
    if (kind != DocumentKind::kQueens) throw mismatch("a queens board");
    record = QueensToSa2(ParseQueens(text));
  } else if (args.to == "v3") {
    if (kind != DocumentKind::kSetCover) throw mismatch("a set cover instance");
    record = SetCoverToV3(ParseSetCover(text));
  } else {
    if (kind != DocumentKind::kInstance) throw mismatch("an hcpi instance");
    const HcpInstance source = ParseInstance(text);
    if (args.to == "v1") {
      record = ReduceV2ToV1(source);
    } else if (args.to == "setcover") {
      record = V3ToSetCover(source);
    } else {
      std::optional<int> b0;
      if (!args.b0.empty()) {
        b0 = source.FindBranch(args.b0);
        if (!b0) throw ExitError(kExitUsage, "unknown branch " + args.b0);
      }
      const Allocation allocation = args.allocation == "multi"
                                        ? Allocation::kMulti
                                        : Allocation::kSingle;
      record = ReduceV3ToV2(source, b0, allocation);
    }
  }
  const std::string target =
      std::holds_alternative<HcpInstance>(record->target)
          ? SerializeInstance(std::get<HcpInstance>(record->target))
          : SerializeSetCover(std::get<SetCoverInstance>(record->target));
  WriteFile(args.out, target);
  WriteFile(args.out + ".map", SerializeRecord(*record));
  out << "wrote " << args.out << " and " << args.out << ".map\n";
  return kExitOk;
}

// --- lift -------------------------------------------------------------------

int Lift(const std::string& mapping_path, const std::string& solution_path,
         const std::string& out_path, std::ostream& out) {
  const ReductionRecord record = ParseRecord(ReadFile(mapping_path));
  const std::string text = ReadFile(solution_path);
  AnySolution target_solution =
      std::holds_alternative<HcpInstance>(record.target)
          ? AnySolution(ParseSolution(record.target_instance(), text))
          : AnySolution(ParseCoverSelection(
                std::get<SetCoverInstance>(record.target), text));
  const AnySolution lifted = LiftSolution(record, target_solution);
  std::string serialized;
  if (const auto* s = std::get_if<Solution>(&lifted)) {
    serialized = SerializeSolution(std::get<HcpInstance>(record.source), *s);
  } else if (const auto* c = std::get_if<CoverSelection>(&lifted)) {
    serialized =
        SerializeCoverSelection(std::get<SetCoverInstance>(record.source), *c);
  } else {
    serialized = SerializePlacement(std::get<QueensPlacement>(lifted));
  }
  Emit(out_path, serialized, out);
  return kExitOk;
}

// --- gen / bench ------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::uint64_t seed = 1;
  GeneratorSpec spec;
  std::string alpha = "1";
  std::string phi;
  std::string allocation = "multi";
  int capacity = 0;
};

void AddGeneratorOptions(CLI::App* command, GenArgs& g) {
  command->add_option("--family", g.family, "Instance family")
      ->required()
      ->check(CLI::IsMember(
          {"euclidean-v1", "random-graph-v2", "bipartite-v3", "queens-derived"}));
  command->add_option("--seed", g.seed, "Random seed")->required();
  command->add_option("--branches", g.spec.branches, "Number of branches");
  command->add_option("--hubs", g.spec.hubs, "Number of hubs");
  command->add_option("--cost-min", g.spec.cost_min, "Smallest opening cost");
  command->add_option("--cost-max", g.spec.cost_max, "Largest opening cost");
  command->add_option("--task-density", g.spec.task_density,
                      "Probability of each ordered branch pair being a task");
  command->add_option("--edge-prob", g.spec.edge_probability,
                      "Edge probability for graph families");
  command->add_option("--alpha", g.alpha, "Hub-hub discount p/q");
  command->add_option("--phi", g.phi, "Explicit v1 threshold p/q");
  command->add_option("--phi-quantile", g.spec.phi_quantile,
                      "Quantile of single-hub tour lengths used as phi");
  command->add_option("--grid", g.spec.grid, "Grid side for euclidean-v1");
  command->add_option("--allocation", g.allocation, "single or multi")
      ->check(CLI::IsMember({"single", "multi"}));
  command->add_option("--capacity", g.capacity, "Maximum open hubs");
  command->add_option("--queens-n", g.spec.queens_n, "Board size");
  command->add_option("--queens-placed", g.spec.queens_placed,
                      "Queens placed before completion");
}

GeneratorSpec FinishSpec(const GenArgs& g) {
  GeneratorSpec spec = g.spec;
  spec.family = ParseFamily(g.family);
  try {
    spec.alpha = ParseRational(g.alpha);
    if (!g.phi.empty()) spec.phi = ParseRational(g.phi);
  } catch (const std::invalid_argument& e) {
    throw ExitError(kExitUsage, e.what());
  }
  spec.allocation =
      g.allocation == "single" ? Allocation::kSingle : Allocation::kMulti;
  if (g.capacity > 0) spec.capacity = g.capacity;
  return spec;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact, approximate and reduction tools for hub covering"};
  app.name("hubcover");
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an hcpi instance");
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  solve_cmd->add_option("--algo", solve.algo, "Algorithm")
      ->check(CLI::IsMember({"exact", "taskwise", "bounded-enum", "greedy-v3"}));
  solve_cmd->add_option("--k", solve.k, "Subset size bound for bounded-enum");
  solve_cmd->add_option("--out", solve.out, "Write the solution here");
  solve_cmd->add_option("--workers", solve.workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string verify_problem, verify_solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution");
  verify_cmd->add_option("problem", verify_problem, "Problem file")->required();
  verify_cmd->add_option("solution", verify_solution, "Solution file")
      ->required();

  ReduceArgs reduce;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Transform a problem into another one");
  reduce_cmd->add_option("file", reduce.file, "Source problem")->required();
  reduce_cmd->add_option("--to", reduce.to, "Target problem")
      ->required()
      ->check(CLI::IsMember({"v1", "v2", "v3", "setcover", "queens-sa2"}));
  reduce_cmd->add_option("--b0", reduce.b0, "Fixed task endpoint for --to v2");
  reduce_cmd->add_option("--allocation", reduce.allocation,
                         "Allocation of the v2 target")
      ->check(CLI::IsMember({"single", "multi"}));
  reduce_cmd->add_option("--out", reduce.out, "Target file")->required();

  std::string lift_mapping, lift_solution, lift_out;
  auto* lift_cmd =
      app.add_subcommand("lift", "Map a target solution back to the source");
  lift_cmd->add_option("mapping", lift_mapping, "Mapping file")->required();
  lift_cmd->add_option("solution", lift_solution, "Target solution")
      ->required();
  lift_cmd->add_option("--out", lift_out, "Source solution file");

  GenArgs gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  AddGeneratorOptions(gen_cmd, gen);
  gen_cmd->add_option("--out", gen_out, "Instance file");

  GenArgs bench_gen;
  BenchConfig bench;
  std::string algos = "exact";
  std::string csv;
  bool no_wall_time = false;
  auto* bench_cmd =
      app.add_subcommand("bench", "Measure approximation ratios on random instances");
  AddGeneratorOptions(bench_cmd, bench_gen);
  bench_cmd->add_option("--count", bench.count, "Number of instances")
      ->required()
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--algos", algos, "Comma separated algorithm list");
  bench_cmd->add_option("--k", bench.k, "Subset size bound for bounded-enum");
  bench_cmd->add_option("--workers", bench.workers, "Instances solved at once")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", csv, "CSV output file");
  bench_cmd->add_flag("--no-wall-time", no_wall_time, "Omit the wall_ms column");

  std::vector<std::string> argv_storage = {"hubcover"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*solve_cmd) return Solve(solve, out, err);
  if (*verify_cmd) return Verify(verify_problem, verify_solution, out);
  if (*reduce_cmd) return Reduce(reduce, out);
  if (*lift_cmd) return Lift(lift_mapping, lift_solution, lift_out, out);
  if (*gen_cmd) {
    const HcpInstance instance = GenerateInstance(FinishSpec(gen), gen.seed);
    Emit(gen_out, SerializeInstance(instance), out);
    return kExitOk;
  }
  bench.spec = FinishSpec(bench_gen);
  bench.seed = bench_gen.seed;
  bench.solve.limits = SolverLimits::FromEnvironment();
  std::stringstream list(algos);
  for (std::string name; std::getline(list, name, ',');) {
    if (!name.empty()) bench.algorithms.push_back(name);
  }
  Emit(csv, BenchCsv(RunBench(bench), !no_wall_time), out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  try {
    return Run(args, out, err);
  } catch (const ExitError& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInfeasible) out << "infeasible\n";
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
}

}  // namespace hubcover::cli
