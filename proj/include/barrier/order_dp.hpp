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

// Order-preserving solutions via a dynamic program over (sensor prefix,
// movement budget). reach(i, b) is the largest T such that sensors 0..i-1,
// moved in total by at most b budget units and kept in index order, cover
// [0, T]. Sensor i joins the chain after reach t with k units by moving to
// min(x_i + k*unit, t + r_i), which is allowed when x_i - k*unit - r_i <= t.

#ifndef BARRIER_ORDER_DP_HPP_
#define BARRIER_ORDER_DP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "barrier/errors.hpp"
#include "barrier/model.hpp"
#include "barrier/rational.hpp"

namespace barrier {

struct OrderSolution {
  Solution solution;
  ActiveSet active;
  Rational cost;
};

// Largest number of table cells a single DP run may allocate.
inline constexpr int64_t kMaxDpCells = int64_t{1} << 26;

class DpTable {
 public:
  // Sentinel for "sensor not placed" in the choice table.
  static constexpr int64_t kSkip = -1;

  DpTable(const Instance& instance, Rational unit, int64_t max_units)
      : n_(instance.size()), max_units_(max_units), unit_(unit) {
    if (max_units < 0) throw PreconditionError("negative DP budget");
    if (unit <= 0) throw PreconditionError("DP budget unit must be > 0");
    const int64_t cells = static_cast<int64_t>(n_ + 1) * (max_units + 1);
    if (cells > kMaxDpCells) throw ResourceLimitError("DP table too large");
    reach_.assign(static_cast<size_t>(cells), Rational(0));
    choice_.assign(static_cast<size_t>(cells), kSkip);
    Fill(instance);
  }

  size_t sensors() const { return n_; }
  int64_t max_units() const { return max_units_; }
  const Rational& unit() const { return unit_; }
  const Rational& reach(size_t i, int64_t b) const { return reach_[Cell(i, b)]; }
  // Units spent on sensor i-1 in the optimal choice for (i, b), or kSkip.
  int64_t choice(size_t i, int64_t b) const { return choice_[Cell(i, b)]; }

  // Smallest budget whose full-prefix reach covers the barrier.
  std::optional<int64_t> MinCoveringBudget(const Rational& length) const {
    for (int64_t b = 0; b <= max_units_; ++b) {
      if (reach(n_, b) >= length) return b;
    }
    return std::nullopt;
  }

  // Rebuilds the placement behind reach(n, b); unplaced sensors stay put.
  OrderSolution Reconstruct(const Instance& instance, int64_t b) const {
    OrderSolution out;
    out.solution = Solution::Unmoved(instance);
    std::vector<size_t> chain;
    for (size_t i = n_; i > 0; --i) {
      const int64_t k = choice(i, b);
      if (k == kSkip) continue;
      const Sensor& s = instance[i - 1];
      const Rational& t = reach(i - 1, b - k);
      out.solution.y[i - 1] = std::min(s.x + unit_ * k, t + s.r);
      chain.push_back(i - 1);
      b -= k;
    }
    out.active = MinimalActiveSet(instance, out.solution, std::move(chain));
    out.cost = Cost(instance, out.solution);
    return out;
  }

 private:
  size_t Cell(size_t i, int64_t b) const {
    return i * static_cast<size_t>(max_units_ + 1) + static_cast<size_t>(b);
  }

  void Fill(const Instance& instance) {
    const Rational& length = instance.length();
    for (size_t i = 1; i <= n_; ++i) {
      const Sensor& s = instance[i - 1];
      for (int64_t b = 0; b <= max_units_; ++b) {
        Rational best = reach(i - 1, b);
        int64_t best_k = kSkip;
        for (int64_t k = 0; k <= b; ++k) {
          const Rational& t = reach(i - 1, b - k);
          const Rational shift = unit_ * k;
          if (s.x - shift - s.r > t) continue;  // would leave a gap before it
          Rational candidate = std::min(s.x + shift, t + s.r) + s.r;
          if (candidate > length) candidate = length;
          if (candidate > best) {
            best = candidate;
            best_k = k;
          }
        }
        reach_[Cell(i, b)] = best;
        choice_[Cell(i, b)] = best_k;
      }
    }
  }

  size_t n_;
  int64_t max_units_;
  Rational unit_;
  std::vector<Rational> reach_;
  std::vector<int64_t> choice_;
};

// Minimum-cost order-preserving solution of cost <= budget on integral input
// (L, x_i, r_i all integers), or nullopt.
inline std::optional<OrderSolution> DpExact(const Instance& instance, int64_t budget) {
  if (!IsIntegral(instance)) {
    throw PreconditionError("DpExact needs integral L, x and r; scale the instance first");
  }
  if (budget < 0) throw PreconditionError("negative budget");
  const DpTable table(instance, Rational(1), budget);
  const auto b = table.MinCoveringBudget(instance.length());
  if (!b) return std::nullopt;
  return table.Reconstruct(instance, *b);
}

// Optimal order-preserving solution on integral input. Budgets 0, 1, 2, 4, ...
// are tried until one succeeds; each run already reports the smallest
// sufficient budget inside its table.
inline OrderSolution DpOptimal(const Instance& instance) {
  if (!IsIntegral(instance)) {
    throw PreconditionError("DpOptimal needs integral L, x and r; scale the instance first");
  }
  if (!IsFeasible(instance)) throw InfeasibleError("sensors are too short for the barrier");
  for (int64_t budget = 0;; budget = budget == 0 ? 1 : budget * 2) {
    if (auto found = DpExact(instance, budget)) return *std::move(found);
  }
}

// Rounded cost sum ceil(|y_i - x_i| / q).
inline int64_t RoundedCost(const Instance& instance, const Solution& solution,
                           const Rational& q) {
  internal::CheckAligned(instance, solution);
  if (q <= 0) throw PreconditionError("rounding grid must be > 0");
  int64_t total = 0;
  for (size_t i = 0; i < instance.size(); ++i) {
    total += (Abs(solution.y[i] - instance[i].x) / q).Ceil();
  }
  return total;
}

struct EpsParams {
  Rational eps;
  Rational opt_guess;

  Rational q(size_t n) const { return eps * opt_guess / static_cast<int64_t>(n); }
};

// (1 + eps)-approximate order-preserving solution for arbitrary rational input.
//
// Doubling phase: with guess G and q = eps*G/n the DP runs over
// ceil(n/eps) + n units of q. If G >= OPT it must succeed, so a failure proves
// OPT > G. The first success at G_s therefore brackets OPT > G_s/2 (or
// OPT >= G_0, the uncovered length of the initial placement, when the first
// guess succeeds). A final run with that proven lower bound as the guess and
// enough units to reach the cost already found gives cost <= OPT + eps*OPT.
inline OrderSolution DpEps(const Instance& instance, const Rational& eps) {
  if (eps <= 0) throw PreconditionError("eps must be > 0");
  if (!IsFeasible(instance)) throw InfeasibleError("sensors are too short for the barrier");
  const Solution unmoved = Solution::Unmoved(instance);
  const CoverageReport initial = VerifyCoverage(instance, unmoved);
  if (initial.covered) {
    const DpTable table(instance, Rational(1), 0);
    return table.Reconstruct(instance, 0);
  }
  const size_t n = instance.size();
  const int64_t n_units = static_cast<int64_t>(n);
  const int64_t doubling_units = (Rational(n_units) / eps).Ceil() + n_units;

  // Any covering placement moves at least the uncovered length.
  const Rational first_guess = initial.uncovered_length();
  Rational guess = first_guess;
  std::optional<OrderSolution> found;
  for (int attempt = 0; attempt < 200; ++attempt, guess *= 2) {
    const EpsParams params{eps, guess};
    const DpTable table(instance, params.q(n), doubling_units);
    if (const auto b = table.MinCoveringBudget(instance.length())) {
      found = table.Reconstruct(instance, *b);
      break;
    }
  }
  if (!found) throw ResourceLimitError("no OPT bracket within 200 doublings");
  if (guess == first_guess) return *std::move(found);

  const EpsParams lower{eps, guess / 2};
  const Rational q = lower.q(n);
  const int64_t units = (found->cost / q).Ceil() + n_units;
  const DpTable table(instance, q, units);
  const auto b = table.MinCoveringBudget(instance.length());
  if (!b) throw InternalError("refinement DP lost a solution the doubling phase found");
  OrderSolution refined = table.Reconstruct(instance, *b);
  if (found->cost < refined.cost) return *std::move(found);
  return refined;
}

}  // namespace barrier

#endif  // BARRIER_ORDER_DP_HPP_
