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

// Turns a covering solution into an order-preserving one by repeatedly
// swapping two crossing, overlapping active intervals so that together they
// still cover the same span.

#ifndef BARRIER_UNTANGLE_HPP_
#define BARRIER_UNTANGLE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "barrier/errors.hpp"
#include "barrier/model.hpp"
#include "barrier/rational.hpp"

namespace barrier {

// i < j (so x_i <= x_j) while y_i > y_j.
struct CrossingPair {
  size_t i = 0;
  size_t j = 0;

  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

inline bool Overlaps(const Instance& instance, const Solution& solution, size_t a,
                     size_t b) {
  return std::max(Lo(instance, solution, a), Lo(instance, solution, b)) <=
         std::min(Hi(instance, solution, a), Hi(instance, solution, b));
}

// With U = [u1, u2] the union of both intervals, places i flush at u1 and j
// flush at u2. The union stays U and i ends left of j.
inline Solution SwapPair(const Instance& instance, const Solution& solution,
                         CrossingPair pair) {
  internal::CheckAligned(instance, solution);
  const auto [i, j] = pair;
  if (i >= instance.size() || j >= instance.size()) {
    throw StructuralError("crossing pair index out of range");
  }
  if (!(i < j) || !(solution.y[i] > solution.y[j])) {
    throw PreconditionError("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") does not cross");
  }
  if (!Overlaps(instance, solution, i, j)) {
    throw PreconditionError("crossing intervals do not overlap");
  }
  const Rational u1 = std::min(Lo(instance, solution, i), Lo(instance, solution, j));
  const Rational u2 = std::max(Hi(instance, solution, i), Hi(instance, solution, j));
  Solution out = solution;
  out.y[i] = u1 + instance[i].r;
  out.y[j] = u2 - instance[j].r;
  return out;
}

struct UntangleResult {
  Solution solution;
  ActiveSet active;
  size_t swaps = 0;
};

namespace internal {

inline void ResetInactive(const Instance& instance, const ActiveSet& active,
                          Solution& solution) {
  for (size_t i = 0; i < instance.size(); ++i) {
    if (!active.contains(i)) solution.y[i] = instance[i].x;
  }
}

// Crossing overlapping pair of `active` whose union starts leftmost (then
// ends leftmost, then lowest indices).
inline std::optional<CrossingPair> NextSwap(const Instance& instance,
                                            const Solution& solution,
                                            const ActiveSet& active) {
  std::optional<CrossingPair> best;
  std::tuple<Rational, Rational, size_t, size_t> best_key;
  const auto& idx = active.indices;
  for (size_t a = 0; a < idx.size(); ++a) {
    for (size_t b = a + 1; b < idx.size(); ++b) {
      const size_t i = idx[a];
      const size_t j = idx[b];
      if (!(solution.y[i] > solution.y[j])) continue;
      if (!Overlaps(instance, solution, i, j)) continue;
      auto key = std::make_tuple(
          std::min(Lo(instance, solution, i), Lo(instance, solution, j)),
          std::max(Hi(instance, solution, i), Hi(instance, solution, j)), i, j);
      if (!best || key < best_key) {
        best = CrossingPair{i, j};
        best_key = std::move(key);
      }
    }
  }
  return best;
}

}  // namespace internal

// Untangles a covering solution. After every swap the active set is shrunk to
// a minimal one and dropped sensors return to their original positions. Each
// swap removes one inversion from the active chain, so at most n^2 swaps run;
// exceeding that, or repeating the previous swap, raises InternalError.
inline UntangleResult Untangle(const Instance& instance, const Solution& solution) {
  internal::CheckAligned(instance, solution);
  if (!VerifyCoverage(instance, solution).covered) {
    throw InfeasibleError("untangle needs a covering solution");
  }
  UntangleResult result;
  result.solution = solution;
  result.active = MinimalActiveSet(instance, result.solution);
  internal::ResetInactive(instance, result.active, result.solution);

  const size_t n = instance.size();
  const size_t step_bound = std::max<size_t>(1, n * n);
  std::optional<CrossingPair> previous;
  while (auto pair = internal::NextSwap(instance, result.solution, result.active)) {
    if (previous && *previous == *pair) {
      throw InternalError("untangle would swap the same pair twice in a row");
    }
    if (result.swaps >= step_bound) {
      throw InternalError("untangle exceeded its swap bound");
    }
    result.solution = SwapPair(instance, result.solution, *pair);
    ++result.swaps;
    previous = pair;
    if (!CoverageOf(instance, result.solution, result.active.indices).covered) {
      throw InternalError("swap broke coverage");
    }
    result.active = MinimalActiveSet(instance, result.solution, result.active.indices);
    internal::ResetInactive(instance, result.active, result.solution);
  }
  if (!IsOrderPreserving(instance, result.solution, result.active)) {
    throw InternalError("untangle finished with an out-of-order active set");
  }
  return result;
}

}  // namespace barrier

#endif  // BARRIER_UNTANGLE_HPP_
