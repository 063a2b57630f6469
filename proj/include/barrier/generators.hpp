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

// Instance families: the big-sensor-at-the-origin constructions used in the
// ratio experiments, the Exact-Cover reduction behind the k-move hardness
// result, and seeded random instances.

#ifndef BARRIER_GENERATORS_HPP_
#define BARRIER_GENERATORS_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "barrier/errors.hpp"
#include "barrier/model.hpp"
#include "barrier/rational.hpp"

namespace barrier {

// One sensor of radius rho at 0 followed by unit sensors at 1, 3, ...,
// L - 2*rho - 1. The small sensors tile [0, L - 2*rho] exactly.
inline Instance GenFig5(const Rational& rho, const Rational& length) {
  if (rho < 1) throw PreconditionError("rho must be >= 1");
  if (!(length > 2 * rho)) throw PreconditionError("length must exceed 2*rho");
  const Rational smalls = (length - 2 * rho) / 2;
  if (!smalls.is_integer()) {
    throw PreconditionError("(length - 2*rho)/2 must be a positive integer");
  }
  std::vector<Sensor> sensors{{Rational(0), rho}};
  for (int64_t i = 0; i < smalls.num(); ++i) sensors.push_back({Rational(2 * i + 1), Rational(1)});
  return Instance(length, std::move(sensors));
}

// One sensor of radius rho at 0 plus m unit sensors at 1 + (i-1)(2 + delta),
// barrier length 2m + (m-1)*delta. Consecutive small sensors leave gaps of
// width delta.
inline Instance GenFig6(const Rational& rho, int64_t m, const Rational& delta) {
  if (rho < 1) throw PreconditionError("rho must be >= 1");
  if (m < 1) throw PreconditionError("m must be >= 1");
  if (!(delta > 0)) throw PreconditionError("delta must be > 0");
  if (!(delta * m < 2 * rho)) throw PreconditionError("m*delta must stay below 2*rho");
  std::vector<Sensor> sensors{{Rational(0), rho}};
  for (int64_t i = 0; i < m; ++i) {
    sensors.push_back({1 + (2 + delta) * i, Rational(1)});
  }
  return Instance(2 * m + delta * (m - 1), std::move(sensors));
}

// --- Exact-Cover reduction ------------------------------------------------------

struct ExactCoverInstance {
  // Universe {1, ..., m}.
  int64_t m = 0;
  std::vector<std::vector<int64_t>> sets;
  int64_t k = 0;

  void Validate() const {
    if (m < 0) throw PreconditionError("universe size must be >= 0");
    if (k < 0) throw PreconditionError("k must be >= 0");
    for (const auto& set : sets) {
      if (set.empty()) throw PreconditionError("exact-cover sets must be nonempty");
      for (int64_t e : set) {
        if (e < 1 || e > m) {
          throw PreconditionError("element " + std::to_string(e) + " outside universe");
        }
      }
      std::vector<int64_t> sorted = set;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("exact-cover set lists an element twice");
      }
    }
  }
};

struct ReductionOutput {
  Instance instance;
  Rational budget;
  int64_t k = 0;
  // Source set (index into ExactCoverInstance::sets) of each sensor, aligned
  // with the sorted instance.
  std::vector<size_t> source_set;
};

namespace internal {

inline Rational Power(int64_t base, int64_t exp) {
  Rational out(1);
  for (int64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace internal

// Set S_i becomes a sensor of length sum_{j in S_i} (n+1)^(j-1) parked at
// x_i = -r_i - sum_{j in S_i} (n+1)^(j+m). The barrier has length
// sum_j (n+1)^(j-1): covering it with whole sensors amounts to picking sets
// whose "digits" in base n+1 add to 11...1 without carries.
inline ReductionOutput ReduceExactCover(const ExactCoverInstance& ec) {
  ec.Validate();
  const auto n = static_cast<int64_t>(ec.sets.size());
  const int64_t base = n + 1;
  std::vector<Sensor> sensors;
  for (const auto& set : ec.sets) {
    Rational e_sum;
    Rational d_sum;
    for (int64_t j : set) {
      e_sum += internal::Power(base, j - 1);
      d_sum += internal::Power(base, j + ec.m);
    }
    const Rational r = e_sum / 2;
    sensors.push_back({-r - d_sum, r});
  }
  Rational length;
  Rational far;
  for (int64_t j = 1; j <= ec.m; ++j) {
    length += internal::Power(base, j - 1);
    far += internal::Power(base, j + ec.m);
  }
  ReductionOutput out;
  out.instance = Instance(length, sensors);
  out.budget = far + length * ec.k;
  out.k = ec.k;
  for (size_t i = 0; i < out.instance.size(); ++i) {
    out.source_set.push_back(out.instance.original_index(i));
  }
  return out;
}

// Moves the sensors of `chosen` (indices into ec.sets) onto the barrier,
// tiling from 0 in the given order. For an exact cover of size <= k this costs
// at most the reduction budget.
inline Solution ReductionWitness(const ReductionOutput& reduction,
                                 const std::vector<size_t>& chosen) {
  const Instance& inst = reduction.instance;
  Solution out = Solution::Unmoved(inst);
  Rational left;
  for (size_t set : chosen) {
    const auto it = std::find(reduction.source_set.begin(), reduction.source_set.end(), set);
    if (it == reduction.source_set.end()) throw PreconditionError("unknown set index");
    const auto i = static_cast<size_t>(it - reduction.source_set.begin());
    out.y[i] = left + inst[i].r;
    left += 2 * inst[i].r;
  }
  return out;
}

// Exhaustive decider: some <= k pairwise-disjoint sets whose union is the
// universe. Returns the chosen set indices through `witness` when non-null.
inline bool SolveExactCoverBrute(const ExactCoverInstance& ec,
                                 std::vector<size_t>* witness = nullptr,
                                 size_t max_sets = 24) {
  ec.Validate();
  const size_t n = ec.sets.size();
  if (n > max_sets) throw ResourceLimitError("too many sets for exhaustive exact cover");
  if (ec.m > 63) throw ResourceLimitError("universe too large for exhaustive exact cover");
  const uint64_t universe = ec.m == 0 ? 0 : (~uint64_t{0} >> (64 - ec.m));
  std::vector<uint64_t> masks;
  for (const auto& set : ec.sets) {
    uint64_t mask = 0;
    for (int64_t e : set) mask |= uint64_t{1} << (e - 1);
    masks.push_back(mask);
  }
  for (uint64_t pick = 0; pick < (uint64_t{1} << n); ++pick) {
    if (std::popcount(pick) > ec.k) continue;
    uint64_t seen = 0;
    bool disjoint = true;
    for (size_t i = 0; i < n && disjoint; ++i) {
      if (!(pick >> i & 1)) continue;
      if (seen & masks[i]) disjoint = false;
      seen |= masks[i];
    }
    if (disjoint && seen == universe) {
      if (witness) {
        witness->clear();
        for (size_t i = 0; i < n; ++i) {
          if (pick >> i & 1) witness->push_back(i);
        }
      }
      return true;
    }
  }
  return false;
}

// --- Random instances -----------------------------------------------------------

struct RandomSpec {
  int64_t n = 0;
  int64_t length = 0;
  int64_t r_min = 1;
  int64_t r_max = 1;
  int64_t x_min = 0;
  int64_t x_max = 0;
  uint64_t seed = 0;
};

namespace internal {

// Uniform integer in [lo, hi] by rejection on the raw 64-bit stream, so the
// sequence is identical across standard libraries.
inline int64_t UniformInt(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  if (span == 0) return static_cast<int64_t>(rng());
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<int64_t>(static_cast<uint64_t>(lo) + draw % span);
}

}  // namespace internal

// n sensors with integer radius uniform in [r_min, r_max] and integer centre
// uniform in [x_min, x_max]; radius drawn first for each sensor. Stream
// version 1: mt19937_64 seeded with `seed`.
inline Instance GenRandom(const RandomSpec& spec) {
  if (spec.n < 0) throw PreconditionError("n must be >= 0");
  if (spec.length < 0) throw PreconditionError("length must be >= 0");
  if (spec.r_min < 1 || spec.r_min > spec.r_max) {
    throw PreconditionError("need 1 <= r_min <= r_max");
  }
  if (spec.x_min > spec.x_max) throw PreconditionError("need x_min <= x_max");
  std::mt19937_64 rng(spec.seed);
  std::vector<Sensor> sensors;
  sensors.reserve(static_cast<size_t>(spec.n));
  for (int64_t i = 0; i < spec.n; ++i) {
    const int64_t r = internal::UniformInt(rng, spec.r_min, spec.r_max);
    const int64_t x = internal::UniformInt(rng, spec.x_min, spec.x_max);
    sensors.push_back({Rational(x), Rational(r)});
  }
  return Instance(Rational(spec.length), std::move(sensors));
}

}  // namespace barrier

#endif  // BARRIER_GENERATORS_HPP_
