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

// Domain types for moving sensors on a line so that their intervals cover the
// barrier [0, L], plus the coverage and cost accounting shared by every
// solver. All arithmetic is exact.

#ifndef BARRIER_MODEL_HPP_
#define BARRIER_MODEL_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "barrier/errors.hpp"
#include "barrier/rational.hpp"

namespace barrier {

// A sensor centred at `x` covering [x - r, x + r].
struct Sensor {
  Rational x;
  Rational r;

  friend bool operator==(const Sensor&, const Sensor&) = default;
};

// Barrier length plus sensors sorted by (x, r). Index i always refers to the
// i-th sensor in that order; `original_index(i)` maps back to the order the
// sensors were supplied in.
class Instance {
 public:
  Instance() = default;

  Instance(Rational length, std::vector<Sensor> sensors) : length_(length) {
    if (length_ < 0) throw StructuralError("barrier length must be >= 0");
    for (const Sensor& s : sensors) {
      if (s.r <= 0) throw StructuralError("sensor radius must be > 0");
    }
    std::vector<size_t> order(sensors.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (sensors[a].x != sensors[b].x) return sensors[a].x < sensors[b].x;
      return sensors[a].r < sensors[b].r;
    });
    sensors_.reserve(sensors.size());
    for (size_t i : order) sensors_.push_back(sensors[i]);
    original_index_ = std::move(order);
  }

  const Rational& length() const { return length_; }
  std::span<const Sensor> sensors() const { return sensors_; }
  const Sensor& operator[](size_t i) const { return sensors_[i]; }
  size_t size() const { return sensors_.size(); }
  bool empty() const { return sensors_.empty(); }
  size_t original_index(size_t i) const { return original_index_[i]; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.length_ == b.length_ && a.sensors_ == b.sensors_;
  }

 private:
  Rational length_;
  std::vector<Sensor> sensors_;
  std::vector<size_t> original_index_;
};

// New centres, index-aligned with Instance::sensors().
struct Solution {
  std::vector<Rational> y;

  static Solution Unmoved(const Instance& instance) {
    Solution s;
    s.y.reserve(instance.size());
    for (const Sensor& sensor : instance.sensors()) s.y.push_back(sensor.x);
    return s;
  }

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Sorted, duplicate-free sensor indices.
struct ActiveSet {
  std::vector<size_t> indices;

  bool contains(size_t i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
  }
  size_t size() const { return indices.size(); }

  friend bool operator==(const ActiveSet&, const ActiveSet&) = default;
};

// Open interval (lo, hi) of the barrier left uncovered.
struct Gap {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Gap&, const Gap&) = default;
};

struct CoverageReport {
  bool covered = true;
  std::vector<Gap> gaps;

  Rational uncovered_length() const {
    Rational total;
    for (const Gap& g : gaps) total += g.length();
    return total;
  }
};

namespace internal {

inline void CheckAligned(const Instance& instance, const Solution& solution) {
  if (solution.y.size() != instance.size()) {
    throw StructuralError("solution has " + std::to_string(solution.y.size()) +
                          " positions for " + std::to_string(instance.size()) +
                          " sensors");
  }
}

}  // namespace internal

inline Rational Lo(const Instance& instance, const Solution& solution, size_t i) {
  return solution.y[i] - instance[i].r;
}
inline Rational Hi(const Instance& instance, const Solution& solution, size_t i) {
  return solution.y[i] + instance[i].r;
}

// Total movement sum |y_i - x_i|.
inline Rational Cost(const Instance& instance, const Solution& solution) {
  internal::CheckAligned(instance, solution);
  Rational total;
  for (size_t i = 0; i < instance.size(); ++i) {
    total += Abs(solution.y[i] - instance[i].x);
  }
  return total;
}

inline size_t MoverCount(const Instance& instance, const Solution& solution) {
  internal::CheckAligned(instance, solution);
  size_t movers = 0;
  for (size_t i = 0; i < instance.size(); ++i) {
    if (solution.y[i] != instance[i].x) ++movers;
  }
  return movers;
}

// Sweep over the closed intervals of `subset`, clipped to [0, L]. Touching
// intervals leave no gap.
inline CoverageReport CoverageOf(const Instance& instance, const Solution& solution,
                                 std::span<const size_t> subset) {
  internal::CheckAligned(instance, solution);
  CoverageReport report;
  const Rational& length = instance.length();
  if (length == 0) return report;

  std::vector<std::pair<Rational, Rational>> spans;
  spans.reserve(subset.size());
  for (size_t i : subset) {
    const Rational lo = std::max(Lo(instance, solution, i), Rational(0));
    const Rational hi = std::min(Hi(instance, solution, i), length);
    if (lo <= hi) spans.emplace_back(lo, hi);
  }
  std::sort(spans.begin(), spans.end());

  // Starting the sweep at 0 with an empty reach also reports an uncovered
  // point 0 as part of the first gap (0, lo).
  Rational reach;
  for (const auto& [lo, hi] : spans) {
    if (lo > reach) report.gaps.push_back({reach, lo});
    reach = std::max(reach, hi);
  }
  if (reach < length) report.gaps.push_back({reach, length});
  report.covered = report.gaps.empty();
  return report;
}

inline CoverageReport VerifyCoverage(const Instance& instance, const Solution& solution) {
  std::vector<size_t> all(instance.size());
  std::iota(all.begin(), all.end(), size_t{0});
  return CoverageOf(instance, solution, all);
}

// Sensors can move freely, so total interval length is the only obstruction.
inline bool IsFeasible(const Instance& instance) {
  Rational total;
  for (const Sensor& s : instance.sensors()) total += 2 * s.r;
  return total >= instance.length();
}

// Drops indices from `candidates` in increasing radius order (ties: higher
// index first) whenever the rest still covers [0, L], so long sensors are
// kept over short ones they make redundant.
inline ActiveSet MinimalActiveSet(const Instance& instance, const Solution& solution,
                                  std::vector<size_t> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (!CoverageOf(instance, solution, candidates).covered) {
    throw InfeasibleError("solution does not cover the barrier");
  }
  std::vector<size_t> scan = candidates;
  std::sort(scan.begin(), scan.end(), [&](size_t a, size_t b) {
    if (instance[a].r != instance[b].r) return instance[a].r < instance[b].r;
    return a > b;
  });
  std::vector<size_t> kept = candidates;
  for (size_t drop : scan) {
    std::vector<size_t> trial;
    trial.reserve(kept.size());
    for (size_t i : kept) {
      if (i != drop) trial.push_back(i);
    }
    if (CoverageOf(instance, solution, trial).covered) kept = std::move(trial);
  }
  return ActiveSet{std::move(kept)};
}

inline ActiveSet MinimalActiveSet(const Instance& instance, const Solution& solution) {
  std::vector<size_t> all(instance.size());
  std::iota(all.begin(), all.end(), size_t{0});
  return MinimalActiveSet(instance, solution, std::move(all));
}

// True iff y restricted to `active` strictly increases with the index.
inline bool IsOrderPreserving(const Instance& instance, const Solution& solution,
                              const ActiveSet& active) {
  internal::CheckAligned(instance, solution);
  for (size_t k = 1; k < active.indices.size(); ++k) {
    if (!(solution.y[active.indices[k - 1]] < solution.y[active.indices[k]])) return false;
  }
  return true;
}

inline Rational Rho(const Instance& instance) {
  if (instance.empty()) throw StructuralError("rho of an empty instance");
  Rational lo = instance[0].r;
  Rational hi = instance[0].r;
  for (const Sensor& s : instance.sensors()) {
    lo = std::min(lo, s.r);
    hi = std::max(hi, s.r);
  }
  return hi / lo;
}

// Largest number of intervals of `active` sharing a point of [0, L]. The
// maximum over a family of closed intervals is attained at 0 or at one of the
// left endpoints, so only those points are probed.
inline size_t MaxStabbing(const Instance& instance, const Solution& solution,
                          const ActiveSet& active) {
  internal::CheckAligned(instance, solution);
  std::vector<Rational> probes{Rational(0)};
  for (size_t i : active.indices) {
    const Rational lo = Lo(instance, solution, i);
    if (lo >= 0 && lo <= instance.length()) probes.push_back(lo);
  }
  size_t best = 0;
  for (const Rational& p : probes) {
    size_t count = 0;
    for (size_t i : active.indices) {
      if (Lo(instance, solution, i) <= p && p <= Hi(instance, solution, i)) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

// --- Integral scaling --------------------------------------------------------

inline bool IsIntegral(const Instance& instance) {
  if (!instance.length().is_integer()) return false;
  return std::all_of(instance.sensors().begin(), instance.sensors().end(),
                     [](const Sensor& s) { return s.x.is_integer() && s.r.is_integer(); });
}

// Smallest positive integer f such that f*L, f*x_i and f*r_i are integers.
inline int64_t IntegralScale(const Instance& instance) {
  int64_t f = instance.length().den();
  for (const Sensor& s : instance.sensors()) {
    f = Lcm(f, s.x.den());
    f = Lcm(f, s.r.den());
  }
  return f;
}

inline Instance Scaled(const Instance& instance, const Rational& factor) {
  std::vector<Sensor> sensors;
  sensors.reserve(instance.size());
  for (const Sensor& s : instance.sensors()) sensors.push_back({s.x * factor, s.r * factor});
  return Instance(instance.length() * factor, std::move(sensors));
}

inline Solution Scaled(const Solution& solution, const Rational& factor) {
  Solution out;
  out.y.reserve(solution.y.size());
  for (const Rational& v : solution.y) out.y.push_back(v * factor);
  return out;
}

}  // namespace barrier

#endif  // BARRIER_MODEL_HPP_
