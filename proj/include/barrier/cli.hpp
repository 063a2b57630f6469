// Copyright 2026 The Barrier Coverage Authors
//
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

// Command-line front end: gen, solve, verify, bench.
//
// Exit codes: 0 success, 1 no solution / infeasible / verification failed,
// 2 usage or parameter error, 3 resource limit.

#ifndef BARRIER_CLI_HPP_
#define BARRIER_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "barrier/errors.hpp"
#include "barrier/generators.hpp"
#include "barrier/harness.hpp"
#include "barrier/io.hpp"
#include "barrier/model.hpp"
#include "barrier/rational.hpp"

namespace barrier::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAbsent = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

namespace internal {

inline std::vector<Rational> ParseRationalList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(Rational::Parse(item));
  }
  return out;
}

inline std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

inline ExactCoverInstance ParseExactCover(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ReadTextFile(path));
    ExactCoverInstance ec;
    ec.m = doc.at("m").get<int64_t>();
    ec.sets = doc.at("sets").get<std::vector<std::vector<int64_t>>>();
    ec.k = doc.at("k").get<int64_t>();
    return ec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad exact-cover spec '" + path + "': " + e.what());
  }
}

struct GenFlags {
  std::string family;
  std::string rho = "2";
  std::string length;
  int64_t m = 4;
  std::string delta = "1/8";
  int64_t n = 5;
  int64_t r_min = 1;
  int64_t r_max = 3;
  int64_t x_min = -5;
  int64_t x_max = 15;
  uint64_t seed = 42;
  std::string spec;
  std::string out;
};

inline int Gen(const GenFlags& f, std::ostream& out) {
  if (f.family == "fig5") {
    if (f.length.empty()) throw PreconditionError("fig5 needs --length");
    const Rational rho = Rational::Parse(f.rho);
    const Rational length = Rational::Parse(f.length);
    Emit(f.out,
         FormatInstance(GenFig5(rho, length),
                        {"family fig5 rho " + rho.ToString() + " length " + length.ToString()}),
         out);
  } else if (f.family == "fig6") {
    const Rational rho = Rational::Parse(f.rho);
    const Rational delta = Rational::Parse(f.delta);
    Emit(f.out,
         FormatInstance(GenFig6(rho, f.m, delta),
                        {"family fig6 rho " + rho.ToString() + " m " + std::to_string(f.m) +
                         " delta " + delta.ToString()}),
         out);
  } else if (f.family == "random") {
    if (f.length.empty()) throw PreconditionError("random needs --length");
    const Rational length = Rational::Parse(f.length);
    if (!length.is_integer()) throw PreconditionError("random needs an integer --length");
    const RandomSpec spec{f.n, length.num(), f.r_min, f.r_max, f.x_min, f.x_max, f.seed};
    Emit(f.out,
         FormatInstance(GenRandom(spec), {"family random seed " + std::to_string(f.seed)}),
         out);
  } else if (f.family == "exact-cover") {
    if (f.spec.empty()) throw PreconditionError("exact-cover needs --spec");
    const ReductionOutput red = ReduceExactCover(ParseExactCover(f.spec));
    Emit(f.out,
         FormatInstance(red.instance, {"family exact-cover", "B " + red.budget.ToString(),
                                       "k " + std::to_string(red.k)}),
         out);
    if (!f.out.empty()) {
      nlohmann::json side;
      side["B"] = red.budget.ToString();
      side["k"] = red.k;
      side["source_set"] = red.source_set;
      WriteTextFile(f.out + ".json", side.dump(2) + "\n");
    }
  } else {
    throw PreconditionError("unknown family '" + f.family + "'");
  }
  return kExitOk;
}

struct SolveFlags {
  std::string algo;
  std::string budget;
  std::string eps = "1/4";
  std::string input;
  std::string out;
};

inline int Solve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  const Instance instance = ParseInstance(ReadTextFile(f.input));
  AlgoOptions options;
  if (!f.budget.empty()) options.budget = Rational::Parse(f.budget);
  options.eps = Rational::Parse(f.eps);
  const AlgoOutcome outcome = RunAlgorithm(f.algo, instance, options);
  if (outcome.status != RunStatus::kOk) {
    err << "no solution: " << (outcome.detail.empty() ? "infeasible" : outcome.detail) << '\n';
    return kExitAbsent;
  }
  Emit(f.out, FormatSolution(instance, *outcome.solution), out);
  return kExitOk;
}

struct VerifyFlags {
  std::string instance;
  std::string solution;
  std::string max_cost;
  std::optional<int64_t> max_movers;
};

inline int Verify(const VerifyFlags& f, std::ostream& out) {
  const Instance instance = ParseInstance(ReadTextFile(f.instance));
  const SolutionFile file = ParseSolution(ReadTextFile(f.solution));
  if (file.solution.y.size() != instance.size()) {
    throw ParseError("solution has " + std::to_string(file.solution.y.size()) +
                     " positions for " + std::to_string(instance.size()) + " sensors");
  }
  const CoverageReport report = VerifyCoverage(instance, file.solution);
  const Rational cost = Cost(instance, file.solution);
  const size_t movers = MoverCount(instance, file.solution);
  bool ok = report.covered;
  out << "covered: " << (report.covered ? "yes" : "no") << '\n';
  for (const Gap& g : report.gaps) out << "gap: (" << g.lo << ", " << g.hi << ")\n";
  out << "cost: " << cost << '\n';
  out << "movers: " << movers << '\n';
  if (cost != file.cost) {
    out << "cost line mismatch: file says " << file.cost << '\n';
    ok = false;
  }
  if (!f.max_cost.empty() && cost > Rational::Parse(f.max_cost)) {
    out << "cost exceeds " << f.max_cost << '\n';
    ok = false;
  }
  if (f.max_movers && static_cast<int64_t>(movers) > *f.max_movers) {
    out << "movers exceed " << *f.max_movers << '\n';
    ok = false;
  }
  out << (ok ? "OK" : "FAIL") << '\n';
  return ok ? kExitOk : kExitAbsent;
}

struct BenchFlags {
  std::string family;
  std::string dir;
  std::string rho = "2";
  std::string lengths = "8,12,16,20";
  std::string ms = "2,4,8";
  std::string delta = "1/8";
  std::string algos = "dp-optimal,dp-eps,fpt,untangle-oracle";
  std::string reference = "exact";
  std::string eps = "1/4";
  std::string out;
};

inline int Bench(const BenchFlags& f, std::ostream& out) {
  if (f.family.empty() == f.dir.empty()) {
    throw PreconditionError("bench needs exactly one of --family or --dir");
  }
  AlgoOptions options;
  options.eps = Rational::Parse(f.eps);
  std::vector<RunRecord> records;
  if (!f.family.empty()) {
    SweepSpec spec;
    spec.family = f.family;
    spec.rho = Rational::Parse(f.rho);
    spec.lengths = ParseRationalList(f.lengths);
    for (const Rational& m : ParseRationalList(f.ms)) {
      if (!m.is_integer()) throw PreconditionError("--ms must be integers");
      spec.ms.push_back(m.num());
    }
    spec.delta = Rational::Parse(f.delta);
    records = RatioSweep(spec, options);
  } else {
    namespace fs = std::filesystem;
    if (!fs::is_directory(f.dir)) throw PreconditionError("not a directory: " + f.dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(f.dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".bc") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<std::string> algos = SplitList(f.algos);
    for (const fs::path& path : files) {
      const Instance instance = ParseInstance(ReadTextFile(path.string()));
      for (RunRecord& r : Compare(path.filename().string(), instance, algos, f.reference,
                                  options)) {
        records.push_back(std::move(r));
      }
    }
  }
  std::ostringstream csv;
  WriteCsv(csv, std::move(records));
  Emit(f.out, csv.str(), out);
  return kExitOk;
}

}  // namespace internal

// Runs one command; `args` excludes the program name.
inline int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barrier coverage with mobile sensors"};
  app.require_subcommand(1);

  internal::GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--family", gen.family, "fig5 | fig6 | random | exact-cover")->required();
  gen_cmd->add_option("--rho", gen.rho, "Big sensor radius (fig5, fig6)");
  gen_cmd->add_option("--length", gen.length, "Barrier length (fig5, random)");
  gen_cmd->add_option("--m", gen.m, "Number of small sensors (fig6)");
  gen_cmd->add_option("--delta", gen.delta, "Spacing slack (fig6)");
  gen_cmd->add_option("--n", gen.n, "Number of sensors (random)");
  gen_cmd->add_option("--r-min", gen.r_min, "Smallest radius (random)");
  gen_cmd->add_option("--r-max", gen.r_max, "Largest radius (random)");
  gen_cmd->add_option("--x-min", gen.x_min, "Smallest centre (random)");
  gen_cmd->add_option("--x-max", gen.x_max, "Largest centre (random)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed (random)");
  gen_cmd->add_option("--spec", gen.spec, "Exact-cover JSON {m, sets, k}");
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  internal::SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("--algo", solve.algo, "oracle | exact | fpt | dp-exact | dp-optimal | "
                                              "dp-eps | untangle-oracle")
      ->required();
  solve_cmd->add_option("--budget", solve.budget, "Movement budget");
  solve_cmd->add_option("--eps", solve.eps, "Approximation slack for dp-eps");
  solve_cmd->add_option("--out", solve.out, "Output path (default stdout)");
  solve_cmd->add_option("input", solve.input, "Instance file")->required();

  internal::VerifyFlags verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a solution file");
  verify_cmd->add_option("instance", verify.instance, "Instance file")->required();
  verify_cmd->add_option("solution", verify.solution, "Solution file")->required();
  verify_cmd->add_option("--max-cost", verify.max_cost, "Fail if cost exceeds this");
  verify_cmd->add_option("--max-movers", verify.max_movers, "Fail if more sensors move");

  internal::BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run ratio experiments, write CSV");
  bench_cmd->add_option("--family", bench.family, "fig5 | fig6");
  bench_cmd->add_option("--dir", bench.dir, "Directory of .bc instance files");
  bench_cmd->add_option("--rho", bench.rho, "Big sensor radius");
  bench_cmd->add_option("--lengths", bench.lengths, "Comma list of lengths (fig5)");
  bench_cmd->add_option("--ms", bench.ms, "Comma list of small-sensor counts (fig6)");
  bench_cmd->add_option("--delta", bench.delta, "Spacing slack (fig6)");
  bench_cmd->add_option("--algos", bench.algos, "Comma list of algorithms (--dir)");
  bench_cmd->add_option("--reference", bench.reference, "Reference algorithm (--dir)");
  bench_cmd->add_option("--eps", bench.eps, "Approximation slack for dp-eps");
  bench_cmd->add_option("--out", bench.out, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return internal::Gen(gen, out);
    if (*solve_cmd) return internal::Solve(solve, out, err);
    if (*verify_cmd) return internal::Verify(verify, out);
    if (*bench_cmd) return internal::Bench(bench, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitAbsent;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const OverflowError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace barrier::cli

#endif  // BARRIER_CLI_HPP_
