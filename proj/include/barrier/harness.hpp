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

// Runs solvers by name, compares them against a reference and emits CSV.

#ifndef BARRIER_HARNESS_HPP_
#define BARRIER_HARNESS_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "barrier/errors.hpp"
#include "barrier/exact.hpp"
#include "barrier/generators.hpp"
#include "barrier/model.hpp"
#include "barrier/order_dp.hpp"
#include "barrier/rational.hpp"
#include "barrier/untangle.hpp"

namespace barrier {

enum class RunStatus { kOk, kInfeasible, kResourceLimit, kError };

inline std::string_view StatusName(RunStatus status) {
  switch (status) {
    case RunStatus::kOk:
      return "ok";
    case RunStatus::kInfeasible:
      return "infeasible";
    case RunStatus::kResourceLimit:
      return "resource-limit";
    case RunStatus::kError:
      return "error";
  }
  return "error";
}

struct AlgoOptions {
  // In instance units. Algorithms that need one and get none use the optimal
  // order-preserving cost, which is always sufficient.
  std::optional<Rational> budget;
  Rational eps = Rational(1, 4);
  SearchLimits limits;
};

struct AlgoOutcome {
  RunStatus status = RunStatus::kError;
  std::optional<Solution> solution;
  std::optional<Rational> cost;
  std::string detail;
};

//   oracle           brute force over movement vectors
//   exact            subset DP optimum
//   fpt              leftmost-gap branching
//   dp-exact         order-preserving DP under --budget
//   dp-optimal       optimal order-preserving solution
//   dp-eps           (1 + eps)-approximate order-preserving solution
//   untangle-oracle  exact optimum, then untangled
inline const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> names{"oracle",     "exact",  "fpt",
                                              "dp-exact",   "dp-optimal", "dp-eps",
                                              "untangle-oracle"};
  return names;
}

namespace internal {

inline std::optional<Solution> SolveScaled(std::string_view name, const Instance& scaled,
                                           std::optional<int64_t> budget,
                                           const SearchLimits& limits) {
  const auto default_budget = [&] {
    return budget ? *budget : DpOptimal(scaled).cost.num();
  };
  if (name == "oracle") {
    if (auto r = BruteForce(scaled, default_budget(), limits)) return r->solution;
    return std::nullopt;
  }
  if (name == "exact") {
    if (auto r = ExactOptimum(scaled, budget, limits)) return r->solution;
    return std::nullopt;
  }
  if (name == "fpt") {
    if (auto r = FptSolve(scaled, default_budget(), limits)) return r->solution;
    return std::nullopt;
  }
  if (name == "dp-exact") {
    if (!budget) throw PreconditionError("dp-exact needs a budget");
    if (auto r = DpExact(scaled, *budget)) return r->solution;
    return std::nullopt;
  }
  if (name == "dp-optimal") {
    OrderSolution r = DpOptimal(scaled);
    if (budget && r.cost > *budget) return std::nullopt;
    return r.solution;
  }
  if (name == "untangle-oracle") {
    if (auto r = ExactOptimum(scaled, budget, limits)) {
      return Untangle(scaled, r->solution).solution;
    }
    return std::nullopt;
  }
  throw PreconditionError("unknown algorithm '" + std::string(name) + "'");
}

}  // namespace internal

// Runs algorithm `name`. Integer-grid algorithms see the instance scaled to
// integers (budget scaled and rounded down); solutions come back in the
// original units. Solver errors propagate; see RunCaught for the batch form.
inline AlgoOutcome RunAlgorithm(std::string_view name, const Instance& instance,
                                const AlgoOptions& options = {}) {
  if (options.budget && *options.budget < 0) throw PreconditionError("negative budget");
  AlgoOutcome out;
  std::optional<Solution> solution;
  if (name == "dp-eps") {
    if (!IsFeasible(instance)) {
      out.status = RunStatus::kInfeasible;
      return out;
    }
    OrderSolution r = DpEps(instance, options.eps);
    if (!options.budget || r.cost <= *options.budget) solution = std::move(r.solution);
  } else {
    if (std::find(AlgorithmNames().begin(), AlgorithmNames().end(), name) ==
        AlgorithmNames().end()) {
      throw PreconditionError("unknown algorithm '" + std::string(name) + "'");
    }
    if (!IsFeasible(instance)) {
      out.status = RunStatus::kInfeasible;
      return out;
    }
    const int64_t factor = IntegralScale(instance);
    const Instance scaled = Scaled(instance, Rational(factor));
    std::optional<int64_t> budget;
    if (options.budget) budget = (*options.budget * factor).Floor();
    if (auto s = internal::SolveScaled(name, scaled, budget, options.limits)) {
      solution = Scaled(*s, Rational(1, factor));
    }
  }
  if (!solution) {
    out.status = RunStatus::kInfeasible;
    out.detail = "no covering solution within the budget";
    return out;
  }
  out.status = RunStatus::kOk;
  out.cost = Cost(instance, *solution);
  out.solution = std::move(solution);
  return out;
}

// RunAlgorithm with errors folded into the status.
inline AlgoOutcome RunCaught(std::string_view name, const Instance& instance,
                             const AlgoOptions& options) {
  AlgoOutcome out;
  try {
    return RunAlgorithm(name, instance, options);
  } catch (const InfeasibleError& e) {
    out.status = RunStatus::kInfeasible;
    out.detail = e.what();
  } catch (const ResourceLimitError& e) {
    out.status = RunStatus::kResourceLimit;
    out.detail = e.what();
  } catch (const std::exception& e) {
    out.status = RunStatus::kError;
    out.detail = e.what();
  }
  return out;
}

struct RunRecord {
  std::string instance;
  std::string algo;
  RunStatus status = RunStatus::kError;
  std::optional<Rational> cost;
  std::optional<Rational> ref_cost;
  std::optional<Rational> ratio;
  double time_ms = 0;
};

namespace internal {

inline std::pair<AlgoOutcome, double> Timed(std::string_view name, const Instance& instance,
                                            const AlgoOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AlgoOutcome outcome = RunCaught(name, instance, options);
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;
  return {std::move(outcome), elapsed.count()};
}

}  // namespace internal

// One record per algorithm; the reference runs once and supplies ref_cost.
inline std::vector<RunRecord> Compare(const std::string& id, const Instance& instance,
                                      const std::vector<std::string>& algos,
                                      const std::string& reference,
                                      const AlgoOptions& options = {}) {
  const auto [ref, ref_ms] = internal::Timed(reference, instance, options);
  std::vector<RunRecord> records;
  for (const std::string& algo : algos) {
    RunRecord rec;
    rec.instance = id;
    rec.algo = algo;
    AlgoOutcome outcome;
    if (algo == reference) {
      outcome = ref;
      rec.time_ms = ref_ms;
    } else {
      std::tie(outcome, rec.time_ms) = internal::Timed(algo, instance, options);
    }
    rec.status = outcome.status;
    rec.cost = outcome.cost;
    rec.ref_cost = ref.cost;
    if (rec.cost && rec.ref_cost && *rec.ref_cost > 0) rec.ratio = *rec.cost / *rec.ref_cost;
    records.push_back(std::move(rec));
  }
  return records;
}

struct SweepSpec {
  std::string family;  // "fig5" or "fig6"
  Rational rho = 2;
  std::vector<Rational> lengths;  // fig5
  std::vector<int64_t> ms;        // fig6
  Rational delta = Rational(1, 8);
};

namespace internal {

inline std::string GridId(const std::string& family, size_t index, const std::string& rest) {
  char prefix[16];
  std::snprintf(prefix, sizeof(prefix), "_%03zu_", index);
  return family + prefix + rest;
}

}  // namespace internal

// fig5: optimal order-preserving cost against the exact optimum.
// fig6: the untangled exact optimum against the exact optimum.
inline std::vector<RunRecord> RatioSweep(const SweepSpec& spec,
                                         const AlgoOptions& options = {}) {
  std::vector<RunRecord> rows;
  const auto append = [&](std::vector<RunRecord> more) {
    for (RunRecord& r : more) rows.push_back(std::move(r));
  };
  if (spec.family == "fig5") {
    for (size_t i = 0; i < spec.lengths.size(); ++i) {
      const Instance inst = GenFig5(spec.rho, spec.lengths[i]);
      const std::string id = internal::GridId(
          "fig5", i, "rho=" + spec.rho.ToString() + "_L=" + spec.lengths[i].ToString());
      append(Compare(id, inst, {"exact", "dp-optimal"}, "exact", options));
    }
  } else if (spec.family == "fig6") {
    for (size_t i = 0; i < spec.ms.size(); ++i) {
      const Instance inst = GenFig6(spec.rho, spec.ms[i], spec.delta);
      const std::string id = internal::GridId(
          "fig6", i,
          "rho=" + spec.rho.ToString() + "_m=" + std::to_string(spec.ms[i]) +
              "_delta=" + spec.delta.ToString());
      append(Compare(id, inst, {"exact", "untangle-oracle"}, "exact", options));
    }
  } else {
    throw PreconditionError("unknown sweep family '" + spec.family + "'");
  }
  return rows;
}

inline constexpr std::string_view kCsvHeader = "instance,algo,status,cost,ref_cost,ratio,time_ms";

// Rows sorted by (instance, algo).
inline void WriteCsv(std::ostream& out, std::vector<RunRecord> records) {
  std::stable_sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.instance, a.algo) < std::tie(b.instance, b.algo);
  });
  const auto field = [](const std::optional<Rational>& v) {
    return v ? v->ToString() : std::string();
  };
  out << kCsvHeader << '\n';
  for (const RunRecord& r : records) {
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", r.time_ms);
    out << r.instance << ',' << r.algo << ',' << StatusName(r.status) << ',' << field(r.cost)
        << ',' << field(r.ref_cost) << ',' << field(r.ratio) << ',' << ms << '\n';
  }
}

}  // namespace barrier

#endif  // BARRIER_HARNESS_HPP_
