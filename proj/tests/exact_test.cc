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

#include "barrier/exact.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "barrier/errors.hpp"
#include "barrier/generators.hpp"
#include "barrier/model.hpp"
#include "barrier/untangle.hpp"
#include "support/oracles.hpp"

namespace barrier {
namespace {

Instance I1() { return Instance(4, {{0, 1}, {5, 1}}); }

void ExpectIntegralCover(const Instance& inst, const ExactResult& r) {
  EXPECT_TRUE(VerifyCoverage(inst, r.solution).covered);
  EXPECT_TRUE(testing::ProbeCovered(inst, r.solution));
  EXPECT_EQ(Cost(inst, r.solution), r.cost);
  for (const Rational& y : r.solution.y) EXPECT_TRUE(y.is_integer());
}

TEST(BruteForceTest, Examples) {
  const auto r = BruteForce(I1(), 5);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->cost, 3);
  ExpectIntegralCover(I1(), *r);

  const Instance covering(4, {{1, 1}, {3, 1}});
  const auto zero = BruteForce(covering, 0);
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->cost, 0);

  EXPECT_FALSE(BruteForce(Instance(10, {{0, 1}}), 6).has_value());
  EXPECT_FALSE(BruteForce(I1(), 2).has_value());
}

TEST(BruteForceTest, Fig5Optimum) {
  const auto r = BruteForce(GenFig5(2, 12), 10);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->cost, 10);
}

TEST(BruteForceTest, CapIsResourceErrorNotAbsence) {
  SearchLimits tight;
  tight.max_states = 10;
  EXPECT_THROW(BruteForce(I1(), 5, tight), ResourceLimitError);
  EXPECT_THROW(BruteForce(Instance(4, {{Rational(1, 2), 1}}), 3), PreconditionError);
  EXPECT_THROW(BruteForce(I1(), -1), PreconditionError);
}

TEST(MovementVectorCountTest, SmallCases) {
  EXPECT_EQ(MovementVectorCount(1, 3), 7);
  EXPECT_EQ(MovementVectorCount(2, 1), 5);
  EXPECT_EQ(MovementVectorCount(0, 4), 1);
}

TEST(FptSolveTest, Examples) {
  const auto r = FptSolve(I1(), 3);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->cost, 3);
  ExpectIntegralCover(I1(), *r);
  EXPECT_FALSE(FptSolve(I1(), 2).has_value());
  EXPECT_THROW(FptSolve(Instance(4, {{Rational(1, 2), 1}}), 3), PreconditionError);
}

TEST(FptSolveTest, LargeGapIsAbsentWithoutBranching) {
  SearchLimits one_node;
  one_node.max_nodes = 1;
  // Uncovered length 8 > budget 5: rejected at the root.
  EXPECT_FALSE(FptSolve(Instance(10, {{1, 1}, {30, 5}}), 5, one_node).has_value());
}

TEST(FptSolveTest, NodeCapIsResourceError) {
  SearchLimits tight;
  tight.max_nodes = 2;
  EXPECT_THROW(FptSolve(GenFig5(2, 12), 10, tight), ResourceLimitError);
}

TEST(FptSolveTest, AgreesWithBruteForce) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst =
        GenRandom({1 + static_cast<int64_t>(seed % 6), static_cast<int64_t>(seed % 13), 1, 3,
                   -10, 15, seed});
    const int64_t budget = static_cast<int64_t>(seed % 9);
    const auto brute = BruteForce(inst, budget);
    const auto fpt = FptSolve(inst, budget);
    ASSERT_EQ(brute.has_value(), fpt.has_value()) << "seed " << seed;
    if (!brute) continue;
    ASSERT_EQ(brute->cost, fpt->cost) << "seed " << seed;
    ExpectIntegralCover(inst, *fpt);
  }
}

TEST(FptSolveTest, BudgetMonotone) {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    const Instance inst = GenRandom({5, 10, 1, 3, -10, 15, seed});
    bool seen = false;
    for (int64_t budget = 0; budget <= 8; ++budget) {
      const bool found = FptSolve(inst, budget).has_value();
      ASSERT_TRUE(!seen || found) << "seed " << seed << " budget " << budget;
      seen = seen || found;
    }
  }
}

TEST(GapCandidatesTest, KeepsLongestPerEndpoint) {
  // Gap (4, 10); budget 2 admits right endpoints 3..4 and left endpoints 5..6.
  const Instance inst(10, {{2, 2}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {6, 1}, {9, 4}, {20, 1}});
  const GapCandidateSet c =
      BuildGapCandidates(inst, Solution::Unmoved(inst), std::vector<bool>(inst.size()), 2);
  EXPECT_EQ(c.gap_lo, 4);
  EXPECT_EQ(c.gap_hi, 5);
  ASSERT_EQ(c.left.size(), 1u);
  EXPECT_EQ(c.left[0].first, 4);
  EXPECT_EQ(c.left[0].second, (std::vector<size_t>{0, 1, 2}));
  ASSERT_EQ(c.right.size(), 1u);
  EXPECT_EQ(c.right[0].first, 5);
  EXPECT_EQ(c.right[0].second, (std::vector<size_t>{6, 5}));
}

TEST(KMoveBruteForceTest, Examples) {
  EXPECT_FALSE(KMoveBruteForce(I1(), {100, 0}).has_value());
  const auto all = KMoveBruteForce(I1(), {100, 2});
  ASSERT_TRUE(all.has_value());
  EXPECT_TRUE(VerifyCoverage(I1(), *all).covered);
  EXPECT_FALSE(KMoveBruteForce(I1(), {2, 2}).has_value());
  const auto one = KMoveBruteForce(Instance(4, {{1, 1}, {9, 1}}), {6, 1});
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(MoverCount(Instance(4, {{1, 1}, {9, 1}}), *one), 1u);
}

TEST(KMoveBruteForceTest, ReductionInstanceE1) {
  const ReductionOutput red = ReduceExactCover({2, {{1}, {1, 2}, {2}}, 2});
  const Instance scaled = Scaled(red.instance, 2);
  const auto s = KMoveBruteForce(scaled, {red.budget * 2, 2});
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(VerifyCoverage(scaled, *s).covered);
  EXPECT_LE(Cost(scaled, *s), red.budget * 2);
  EXPECT_LE(MoverCount(scaled, *s), 2u);
}

TEST(KMoveBruteForceTest, CapIsResourceError) {
  SearchLimits tight;
  tight.max_states = 5;
  EXPECT_THROW(KMoveBruteForce(I1(), {10, 2}, tight), ResourceLimitError);
}

TEST(ExactOptimumTest, Examples) {
  EXPECT_EQ(ExactOptimum(I1())->cost, 3);
  EXPECT_EQ(ExactOptimum(GenFig5(2, 12))->cost, 10);
  EXPECT_EQ(ExactOptimum(Instance(0, {}))->cost, 0);
  EXPECT_FALSE(ExactOptimum(Instance(10, {{0, 1}})).has_value());
  EXPECT_FALSE(ExactOptimum(I1(), 2).has_value());
  EXPECT_EQ(ExactOptimum(I1(), 3)->cost, 3);
}

TEST(ExactOptimumTest, AgreesWithBruteForce) {
  int compared = 0;
  for (uint64_t seed = 0; seed < 400; ++seed) {
    const Instance inst =
        GenRandom({1 + static_cast<int64_t>(seed % 6), static_cast<int64_t>(seed % 13), 1, 3,
                   -10, 15, seed});
    const auto exact = ExactOptimum(inst);
    const auto brute = BruteForce(inst, 10);
    if (!IsFeasible(inst)) {
      ASSERT_FALSE(exact.has_value());
      continue;
    }
    ASSERT_TRUE(exact.has_value()) << "seed " << seed;
    ExpectIntegralCover(inst, *exact);
    if (brute) {
      ASSERT_EQ(exact->cost, brute->cost) << "seed " << seed;
      ++compared;
    } else {
      ASSERT_GT(exact->cost, 10) << "seed " << seed;
    }
  }
  EXPECT_GT(compared, 150);
}

TEST(ExactOptimumTest, MinimalActiveSetsStabAtMostTwice) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = GenRandom({7, 14, 1, 4, -10, 20, seed});
    if (!IsFeasible(inst)) continue;
    const auto exact = ExactOptimum(inst);
    ASSERT_TRUE(exact.has_value());
    const ActiveSet active = MinimalActiveSet(inst, exact->solution);
    ASSERT_LE(MaxStabbing(inst, exact->solution, active), 2u) << "seed " << seed;
  }
}

TEST(ExactOptimumTest, TooManySensors) {
  std::vector<Sensor> sensors(25, Sensor{100, 1});
  EXPECT_THROW(ExactOptimum(Instance(40, sensors)), ResourceLimitError);
}

}  // namespace
}  // namespace barrier
