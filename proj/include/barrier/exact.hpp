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

// Exact solvers on integral instances (L, x_i, r_i integers). Some optimal
// solution always uses integer centres, so every search here stays on the
// integer grid:
//
//   BruteForce       exhaustive over movement vectors, the verification oracle
//   FptSolve         budget-bounded branching on the leftmost gap
//   KMoveBruteForce  decider for "cost <= B with at most k movers"
//   ExactOptimum     dynamic program over active-chain subsets; exact for
//                    sizes where movement-vector enumeration is hopeless

#ifndef BARRIER_EXACT_HPP_
#define BARRIER_EXACT_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barrier/errors.hpp"
#include "barrier/model.hpp"
#include "barrier/rational.hpp"

namespace barrier {

struct ExactResult {
  Solution solution;
  Rational cost;
};

struct SearchLimits {
  // Estimated search-space size above which enumeration refuses to start.
  double max_states = 1e8;
  // Branching nodes (FptSolve) or stored states (ExactOptimum).
  int64_t max_nodes = 50'000'000;
};

namespace internal {

struct IntInstance {
  int64_t length = 0;
  std::vector<int64_t> x;
  std::vector<int64_t> r;

  size_t size() const { return x.size(); }
};

inline IntInstance ToIntegral(const Instance& instance, const char* who) {
  if (!IsIntegral(instance)) {
    throw PreconditionError(std::string(who) +
                            " needs integral L, x and r; scale the instance first");
  }
  IntInstance out;
  out.length = instance.length().num();
  for (const Sensor& s : instance.sensors()) {
    out.x.push_back(s.x.num());
    out.r.push_back(s.r.num());
  }
  return out;
}

inline Solution ToSolution(const std::vector<int64_t>& y) {
  Solution s;
  s.y.reserve(y.size());
  for (int64_t v : y) s.y.emplace_back(v);
  return s;
}

// Maximal uncovered open intervals of [0, L] on the integer grid.
inline std::vector<std::pair<int64_t, int64_t>> IntGaps(const IntInstance& inst,
                                                        const std::vector<int64_t>& y) {
  std::vector<std::pair<int64_t, int64_t>> gaps;
  if (inst.length == 0) return gaps;
  std::vector<std::pair<int64_t, int64_t>> spans;
  spans.reserve(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    const int64_t lo = std::max<int64_t>(y[i] - inst.r[i], 0);
    const int64_t hi = std::min<int64_t>(y[i] + inst.r[i], inst.length);
    if (lo <= hi) spans.emplace_back(lo, hi);
  }
  std::sort(spans.begin(), spans.end());
  int64_t reach = 0;
  for (const auto& [lo, hi] : spans) {
    if (lo > reach) gaps.emplace_back(reach, lo);
    reach = std::max(reach, hi);
  }
  if (reach < inst.length) gaps.emplace_back(reach, inst.length);
  return gaps;
}

inline bool IntCovered(const IntInstance& inst, const std::vector<int64_t>& y) {
  return IntGaps(inst, y).empty();
}

inline int64_t IntCost(const IntInstance& inst, const std::vector<int64_t>& y) {
  int64_t total = 0;
  for (size_t i = 0; i < y.size(); ++i) total += y[i] > inst.x[i] ? y[i] - inst.x[i] : inst.x[i] - y[i];
  return total;
}

inline double Choose(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  double c = 1;
  for (int64_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

}  // namespace internal

// Number of integer vectors in the n-dimensional L1 ball of radius `budget`.
inline double MovementVectorCount(size_t n, int64_t budget) {
  double total = 0;
  const auto nn = static_cast<int64_t>(n);
  for (int64_t k = 0; k <= std::min(nn, budget); ++k) {
    total += std::pow(2.0, static_cast<double>(k)) * internal::Choose(nn, k) *
             internal::Choose(budget, k);
  }
  return total;
}

// --- Brute force --------------------------------------------------------------

namespace internal {

class BruteForceSearch {
 public:
  BruteForceSearch(const IntInstance& inst) : inst_(inst), y_(inst.x) {
    for (size_t i = 0; i < inst.size(); ++i) {
      lo_.push_back(std::min(-inst.r[i], inst.x[i]));
      hi_.push_back(std::max(inst.length + inst.r[i], inst.x[i]));
    }
  }

  // Any covering assignment whose total movement is exactly `level`.
  bool FindAtLevel(int64_t level) { return Assign(0, level); }
  const std::vector<int64_t>& positions() const { return y_; }

 private:
  bool Assign(size_t i, int64_t remaining) {
    const size_t n = inst_.size();
    if (i == n) return remaining == 0 && IntCovered(inst_, y_);
    const int64_t x = inst_.x[i];
    const int64_t first = i + 1 == n ? remaining : 0;
    for (int64_t move = first; move <= remaining; ++move) {
      for (int sign : {-1, 1}) {
        if (move == 0 && sign == 1) continue;
        const int64_t target = x + sign * move;
        if (target < lo_[i] || target > hi_[i]) continue;
        y_[i] = target;
        if (Assign(i + 1, remaining - move)) return true;
      }
    }
    y_[i] = x;
    return false;
  }

  const IntInstance& inst_;
  std::vector<int64_t> y_;
  std::vector<int64_t> lo_;
  std::vector<int64_t> hi_;
};

}  // namespace internal

// Minimum-cost covering solution with cost <= budget, found by enumerating
// integer movement vectors level by level (total movement 0, 1, 2, ...).
// Centres stay within [min(-r_i, x_i), max(L + r_i, x_i)].
inline std::optional<ExactResult> BruteForce(const Instance& instance, int64_t budget,
                                             const SearchLimits& limits = {}) {
  const internal::IntInstance inst = internal::ToIntegral(instance, "BruteForce");
  if (budget < 0) throw PreconditionError("negative budget");
  if (MovementVectorCount(inst.size(), budget) > limits.max_states) {
    throw ResourceLimitError("brute force search space exceeds the state cap");
  }
  internal::BruteForceSearch search(inst);
  for (int64_t level = 0; level <= budget; ++level) {
    if (search.FindAtLevel(level)) {
      return ExactResult{internal::ToSolution(search.positions()), Rational(level)};
    }
  }
  return std::nullopt;
}

// --- FPT branching ------------------------------------------------------------

// Sensors that may be moved to cover the first unit of a gap, grouped by the
// endpoint facing the gap. Only the budget+1 longest sensors per endpoint are
// kept (ties: lower index first).
struct GapCandidateSet {
  int64_t gap_lo = 0;
  int64_t gap_hi = 0;
  // (right endpoint p, sensors with x + r = p), p in [gap_lo + 1 - B, gap_lo].
  std::vector<std::pair<int64_t, std::vector<size_t>>> left;
  // (left endpoint p, sensors with x - r = p), p in [gap_lo + 1, gap_lo + B].
  std::vector<std::pair<int64_t, std::vector<size_t>>> right;
};

namespace internal {

inline GapCandidateSet BuildGapCandidates(const IntInstance& inst,
                                          const std::vector<bool>& moved,
                                          std::pair<int64_t, int64_t> gap, int64_t budget) {
  GapCandidateSet out;
  out.gap_lo = gap.first;
  out.gap_hi = gap.second;
  std::map<int64_t, std::vector<size_t>> left;
  std::map<int64_t, std::vector<size_t>> right;
  for (size_t j = 0; j < inst.size(); ++j) {
    if (moved[j]) continue;
    const int64_t right_end = inst.x[j] + inst.r[j];
    const int64_t left_end = inst.x[j] - inst.r[j];
    if (right_end <= gap.first && right_end >= gap.first + 1 - budget) {
      left[right_end].push_back(j);
    } else if (left_end >= gap.first + 1 && left_end <= gap.first + budget) {
      right[left_end].push_back(j);
    }
  }
  const auto keep_longest = [&](std::vector<size_t>& group) {
    std::stable_sort(group.begin(), group.end(),
                     [&](size_t a, size_t b) { return inst.r[a] > inst.r[b]; });
    if (static_cast<int64_t>(group.size()) > budget + 1) {
      group.resize(static_cast<size_t>(budget + 1));
    }
  };
  for (auto& [p, group] : left) {
    keep_longest(group);
    out.left.emplace_back(p, std::move(group));
  }
  for (auto& [p, group] : right) {
    keep_longest(group);
    out.right.emplace_back(p, std::move(group));
  }
  return out;
}

class FptSearch {
 public:
  FptSearch(const IntInstance& inst, int64_t budget, int64_t max_nodes)
      : inst_(inst), y_(inst.x), moved_(inst.size(), false), best_cost_(budget + 1),
        max_nodes_(max_nodes) {}

  void Run() { Branch(0); }
  bool found() const { return best_.has_value(); }
  int64_t best_cost() const { return best_cost_; }
  const std::vector<int64_t>& best() const { return *best_; }

 private:
  void Branch(int64_t spent) {
    if (++nodes_ > max_nodes_) throw ResourceLimitError("FPT branching exceeded its node cap");
    const auto gaps = IntGaps(inst_, y_);
    if (gaps.empty()) {
      if (spent < best_cost_) {
        best_cost_ = spent;
        best_ = y_;
      }
      return;
    }
    int64_t uncovered = 0;
    for (const auto& [lo, hi] : gaps) uncovered += hi - lo;
    // Each unit of movement uncovers at most one unit of new barrier.
    if (spent + uncovered >= best_cost_) return;
    const int64_t remaining = best_cost_ - 1 - spent;

    // Some unmoved sensor must end up covering [g, g + 1] for the leftmost
    // gap (g, ...); its new interval then starts at or before g.
    const GapCandidateSet candidates =
        BuildGapCandidates(inst_, moved_, gaps.front(), remaining);
    const int64_t g = gaps.front().first;
    const auto try_sensor = [&](size_t j) {
      const int64_t x = inst_.x[j];
      const int64_t r = inst_.r[j];
      const int64_t lo = std::max(g + 1 - r, x - remaining);
      const int64_t hi = std::min(g + r, x + remaining);
      for (int64_t target = lo; target <= hi; ++target) {
        const int64_t step = target > x ? target - x : x - target;
        if (step == 0 || spent + step >= best_cost_) continue;
        y_[j] = target;
        moved_[j] = true;
        Branch(spent + step);
        moved_[j] = false;
        y_[j] = x;
      }
    };
    for (const auto& [p, group] : candidates.left) {
      for (size_t j : group) try_sensor(j);
    }
    for (const auto& [p, group] : candidates.right) {
      for (size_t j : group) try_sensor(j);
    }
  }

  const IntInstance& inst_;
  std::vector<int64_t> y_;
  std::vector<bool> moved_;
  int64_t best_cost_;
  std::optional<std::vector<int64_t>> best_;
  int64_t nodes_ = 0;
  int64_t max_nodes_;
};

}  // namespace internal

inline GapCandidateSet BuildGapCandidates(const Instance& instance, const Solution& current,
                                          const std::vector<bool>& moved, int64_t budget) {
  const internal::IntInstance inst = internal::ToIntegral(instance, "BuildGapCandidates");
  std::vector<int64_t> y;
  for (const Rational& v : current.y) {
    if (!v.is_integer()) throw PreconditionError("positions must be integral");
    y.push_back(v.num());
  }
  const auto gaps = internal::IntGaps(inst, y);
  if (gaps.empty()) throw PreconditionError("placement has no gap");
  return internal::BuildGapCandidates(inst, moved, gaps.front(), budget);
}

// Minimum-cost covering solution with cost <= budget via branching on the
// leftmost gap, or nullopt. Runs in f(budget) * poly(n) time.
inline std::optional<ExactResult> FptSolve(const Instance& instance, int64_t budget,
                                           const SearchLimits& limits = {}) {
  const internal::IntInstance inst = internal::ToIntegral(instance, "FptSolve");
  if (budget < 0) throw PreconditionError("negative budget");
  internal::FptSearch search(inst, budget, limits.max_nodes);
  search.Run();
  if (!search.found()) return std::nullopt;
  return ExactResult{internal::ToSolution(search.best()), Rational(search.best_cost())};
}

// --- k-move decider -------------------------------------------------------------

struct KMoveQuery {
  Rational budget;
  size_t k = 0;
};

namespace internal {

class KMoveSearch {
 public:
  KMoveSearch(const IntInstance& inst, int64_t budget, size_t k)
      : inst_(inst), budget_(budget), k_(k), y_(inst.x) {}

  bool Run() { return Choose(0, 0, 0); }
  const std::vector<int64_t>& positions() const { return y_; }

 private:
  bool Choose(size_t from, size_t used, int64_t spent) {
    if (IntCovered(inst_, y_)) return true;
    if (used == k_) return false;
    for (size_t i = from; i < inst_.size(); ++i) {
      const int64_t x = inst_.x[i];
      for (int64_t target = -inst_.r[i]; target <= inst_.length + inst_.r[i]; ++target) {
        if (target == x) continue;
        const int64_t step = target > x ? target - x : x - target;
        if (spent + step > budget_) continue;
        y_[i] = target;
        if (Choose(i + 1, used + 1, spent + step)) return true;
      }
      y_[i] = x;
    }
    return false;
  }

  const IntInstance& inst_;
  int64_t budget_;
  size_t k_;
  std::vector<int64_t> y_;
};

}  // namespace internal

// Any covering solution with cost <= B and at most k moved sensors. Movers are
// placed at integer centres in [-r_i, L + r_i]; elsewhere they cover nothing.
inline std::optional<Solution> KMoveBruteForce(const Instance& instance,
                                               const KMoveQuery& query,
                                               const SearchLimits& limits = {}) {
  const internal::IntInstance inst = internal::ToIntegral(instance, "KMoveBruteForce");
  if (query.budget < 0) throw PreconditionError("negative budget");
  double estimate = 0;
  double widest = 1;
  for (size_t i = 0; i < inst.size(); ++i) {
    widest = std::max(widest, static_cast<double>(inst.length + 2 * inst.r[i] + 1));
  }
  const auto n = static_cast<int64_t>(inst.size());
  for (int64_t s = 0; s <= std::min<int64_t>(n, static_cast<int64_t>(query.k)); ++s) {
    estimate += internal::Choose(n, s) * std::pow(widest, static_cast<double>(s));
  }
  if (estimate > limits.max_states) {
    throw ResourceLimitError("k-move search space exceeds the state cap");
  }
  internal::KMoveSearch search(inst, query.budget.Floor(), query.k);
  if (!search.Run()) return std::nullopt;
  return internal::ToSolution(search.positions());
}

// --- Subset DP ------------------------------------------------------------------

namespace internal {

// Sensors tiled left to right in index order from 0; a feasible upper bound.
inline std::optional<int64_t> TiledCost(const IntInstance& inst) {
  int64_t reach = 0;
  int64_t cost = 0;
  for (size_t i = 0; i < inst.size() && reach < inst.length; ++i) {
    const int64_t y = reach + inst.r[i];
    cost += y > inst.x[i] ? y - inst.x[i] : inst.x[i] - y;
    reach += 2 * inst.r[i];
  }
  if (reach < inst.length) return std::nullopt;
  return cost;
}

}  // namespace internal

// Exact unrestricted optimum. Any optimal solution has a minimal active set
// whose intervals, sorted left to right, form a chain where each one starts at
// or before the reach of the previous ones; every other sensor stays put. The
// DP walks such chains: state (used sensors, reach) -> least cost, keeping per
// subset only Pareto-optimal (reach, cost) pairs. States that can no longer
// reach L with the remaining sensors' total length, or that exceed `budget`,
// are dropped. Returns nullopt when nothing within `budget` covers.
inline std::optional<ExactResult> ExactOptimum(const Instance& instance,
                                               std::optional<int64_t> budget = std::nullopt,
                                               const SearchLimits& limits = {}) {
  const internal::IntInstance inst = internal::ToIntegral(instance, "ExactOptimum");
  const size_t n = inst.size();
  if (inst.length == 0 || internal::IntCovered(inst, inst.x)) {
    return ExactResult{Solution::Unmoved(instance), Rational(0)};
  }
  if (n > 24) throw ResourceLimitError("ExactOptimum supports at most 24 sensors");
  if (!IsFeasible(instance)) return std::nullopt;

  int64_t bound = std::numeric_limits<int64_t>::max();
  if (const auto tiled = internal::TiledCost(inst)) bound = *tiled;
  if (budget) bound = std::min(bound, *budget);
  if (bound < 0) return std::nullopt;

  int64_t total_length = 0;
  for (int64_t r : inst.r) total_length += 2 * r;

  struct State {
    int64_t reach;
    int64_t cost;
    int64_t prev_reach;
    int64_t y;
    int32_t sensor;
  };
  const uint32_t full = (uint32_t{1} << n);
  std::vector<std::vector<State>> states(full);
  states[0].push_back({0, 0, 0, 0, -1});
  int64_t stored = 1;

  int64_t best_cost = bound + 1;
  uint32_t best_mask = 0;
  int64_t best_index = -1;

  for (uint32_t mask = 0; mask < full; ++mask) {
    auto& here = states[mask];
    if (here.empty()) continue;
    // Pareto front: larger reach first, each kept state strictly cheaper.
    std::sort(here.begin(), here.end(), [](const State& a, const State& b) {
      if (a.reach != b.reach) return a.reach > b.reach;
      return a.cost < b.cost;
    });
    std::vector<State> front;
    for (const State& s : here) {
      if (s.cost >= best_cost) continue;
      if (front.empty() || s.cost < front.back().cost) front.push_back(s);
    }
    here = std::move(front);

    int64_t used_length = 0;
    for (size_t j = 0; j < n; ++j) {
      if (mask & (uint32_t{1} << j)) used_length += 2 * inst.r[j];
    }
    for (size_t idx = 0; idx < here.size(); ++idx) {
      const State s = here[idx];
      if (s.reach >= inst.length) {
        if (s.cost < best_cost) {
          best_cost = s.cost;
          best_mask = mask;
          best_index = static_cast<int64_t>(idx);
        }
        continue;
      }
      for (size_t j = 0; j < n; ++j) {
        const uint32_t bit = uint32_t{1} << j;
        if (mask & bit) continue;
        const int64_t r = inst.r[j];
        const int64_t x = inst.x[j];
        const int64_t rest = total_length - used_length - 2 * r;
        const int64_t top = std::min(inst.length, s.reach + 2 * r);
        for (int64_t reach = s.reach + 1; reach <= top; ++reach) {
          if (reach + rest < inst.length) continue;
          int64_t y = reach - r;
          if (reach == inst.length) y = std::clamp(x, inst.length - r, s.reach + r);
          const int64_t cost = s.cost + (y > x ? y - x : x - y);
          if (cost >= best_cost) continue;
          states[mask | bit].push_back({reach, cost, s.reach, y, static_cast<int32_t>(j)});
          if (++stored > limits.max_nodes) {
            throw ResourceLimitError("ExactOptimum exceeded its state cap");
          }
        }
      }
    }
  }
  if (best_index < 0) return std::nullopt;

  std::vector<int64_t> y = inst.x;
  uint32_t mask = best_mask;
  State s = states[mask][static_cast<size_t>(best_index)];
  while (s.sensor >= 0) {
    y[static_cast<size_t>(s.sensor)] = s.y;
    mask &= ~(uint32_t{1} << s.sensor);
    const int64_t prev = s.prev_reach;
    const auto& prev_states = states[mask];
    const auto it = std::find_if(prev_states.begin(), prev_states.end(),
                                 [&](const State& p) { return p.reach == prev; });
    if (it == prev_states.end()) throw InternalError("ExactOptimum lost a parent state");
    s = *it;
  }
  if (!internal::IntCovered(inst, y) || internal::IntCost(inst, y) != best_cost) {
    throw InternalError("ExactOptimum reconstruction mismatch");
  }
  return ExactResult{internal::ToSolution(y), Rational(best_cost)};
}

}  // namespace barrier

#endif  // BARRIER_EXACT_HPP_
