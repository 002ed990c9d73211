// Copyright 2026 The shmetric Authors.
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


#include "shmetric/shsolvers.hpp"

#include <cmath>

#include "generators.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace shm {
namespace {

ShInstance Counterexample() {
  return ShInstance::Homogeneous(PolymatroidSpec::Modular({1.0, 1.0, 1.0}),
                                 {ElementSet(3, {0, 1}), ElementSet(3, {0, 2}), ElementSet(3, {1, 2})});
}

TEST(InstanceTest, ObjectiveAndSplitMatchOracle) {
  Rng rng = MakeRng(51);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 1 + UniformIndex(rng, 10);
    const ShInstance inst = testing::RandomInstance(n, 1 + UniformIndex(rng, 4), rng);
    const ElementSet a = testing::RandomSet(n, rng);
    EXPECT_NEAR(ShObjective(inst, a), oracle::Objective(inst, oracle::ToMask(a)), 1e-9);
    EXPECT_NEAR(UnionSplitValue(inst, a), oracle::Split(inst, oracle::ToMask(a)), 1e-9);
  }
}

TEST(InstanceTest, ValidatesShape) {
  const auto f = PolymatroidSpec::Modular({1.0, 1.0});
  EXPECT_THROW(ShInstance({}, {}), InvalidInstance);
  EXPECT_THROW(ShInstance({f}, {ElementSet(2), ElementSet(2)}), InvalidInstance);
  EXPECT_THROW(ShInstance({f}, {ElementSet(3)}), InvalidInstance);
  EXPECT_TRUE(ShInstance::Homogeneous(f, {ElementSet(2), ElementSet(2)}).homogeneous());
  EXPECT_FALSE(ShInstance({f, PolymatroidSpec::Modular({1.0, 2.0})}, {ElementSet(2), ElementSet(2)}).homogeneous());
}

TEST(UnionSplitMinTest, CounterexampleValue) {
  const Solution s = UnionSplitMin(Counterexample());
  EXPECT_DOUBLE_EQ(s.value, 3.0);
}

TEST(UnionSplitMinTest, TwoApproximationAgainstOracle) {
  Rng rng = MakeRng(52);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + UniformIndex(rng, 10);
    const ShInstance inst = testing::RandomInstance(n, 1 + UniformIndex(rng, 4), rng);
    const Solution s = UnionSplitMin(inst);
    const double opt = oracle::MinObjective(inst).value;
    EXPECT_LE(s.value, 2.0 * opt + 1e-6);
    EXPECT_NEAR(*s.surrogate_value, oracle::MinSplit(inst).value, 1e-6);
    EXPECT_NEAR(s.value, oracle::Objective(inst, oracle::ToMask(s.set)), 1e-9);
  }
}

TEST(UnionSplitMinTest, TightnessFamilyApproachesTwo) {
  for (double alpha : {2.0, 4.0, 16.0}) {
    const ShInstance inst =
        ShInstance::Homogeneous(PolymatroidSpec::ConcaveCardinality(2, alpha), {ElementSet(2, {0}), ElementSet(2, {1})});
    const Solution s = UnionSplitMin(inst);
    const double opt = oracle::MinObjective(inst).value;
    EXPECT_NEAR(opt, std::pow(2.0, 1.0 / alpha), 1e-12);
    EXPECT_NEAR(s.value / opt, 2.0 / std::pow(2.0, 1.0 / alpha), 1e-9);
  }
}

TEST(UnionSplitMinTest, RejectsConstraints) {
  EXPECT_THROW(UnionSplitMin(Counterexample().WithConstraint(Constraint::AtMost(1))), UnsupportedConstraint);
}

TEST(BestBTest, CounterexampleValue) {
  const Solution s = BestB(Counterexample());
  EXPECT_DOUBLE_EQ(s.value, 4.0);
  EXPECT_EQ(s.set, ElementSet(3, {0, 1}));
  ASSERT_TRUE(s.guarantee.has_value());
  EXPECT_NEAR(s.guarantee->factor, 4.0 / 3.0, 1e-12);
}

TEST(BestBTest, SingleTermIsExact) {
  Rng rng = MakeRng(53);
  const ShInstance inst = testing::RandomInstance(6, 1, rng);
  const Solution s = BestB(inst);
  EXPECT_DOUBLE_EQ(s.value, 0.0);
  EXPECT_DOUBLE_EQ(s.guarantee->factor, 1.0);
}

TEST(BestBTest, HeterogeneousHasNoGuarantee) {
  const ShInstance inst({PolymatroidSpec::Modular({1.0, 1.0}), PolymatroidSpec::Modular({2.0, 1.0})},
                        {ElementSet(2, {0}), ElementSet(2, {1})});
  EXPECT_FALSE(BestB(inst).guarantee.has_value());
}

TEST(MajorMinTest, TraceNonincreasingAndFeasible) {
  Rng rng = MakeRng(54);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 1 + UniformIndex(rng, 9);
    const ShInstance inst = testing::RandomInstance(n, 1 + UniformIndex(rng, 4), rng, testing::RandomCardinality(n, rng));
    const Solution s = MajorMin(inst);
    EXPECT_TRUE(inst.constraint().Admits(s.set.size()));
    for (std::size_t t = 1; t < s.trace.size(); ++t) EXPECT_LE(s.trace[t], s.trace[t - 1] + 1e-9);
    EXPECT_NEAR(s.trace.back(), s.value, 1e-12);
    const auto opt = oracle::MinObjective(inst);
    EXPECT_LE(s.value, oracle::CurvatureBound(inst, opt.argopt) * opt.value + 1e-6);
  }
}

TEST(MajorMinTest, ModularInstancesSolvedExactly) {
  Rng rng = MakeRng(55);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + UniformIndex(rng, 9);
    const ShInstance inst = testing::RandomModularInstance(n, 1 + UniformIndex(rng, 4), rng, testing::RandomCardinality(n, rng));
    const Solution s = MajorMin(inst);
    EXPECT_NEAR(s.value, oracle::MinObjective(inst).value, 1e-9);
    EXPECT_LE(s.iterations, 2u);
  }
}

TEST(MajorMinTest, BoundsAreTightAtAnchor) {
  Rng rng = MakeRng(56);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 1 + UniformIndex(rng, 8);
    const ShInstance inst = testing::RandomInstance(n, 1 + UniformIndex(rng, 3), rng);
    const ElementSet anchor = testing::RandomSet(n, rng);
    for (BoundMode mode : {BoundMode::kGrow, BoundMode::kShrink}) {
      const ModularBound b = BuildModularBound(inst, anchor, mode);
      EXPECT_NEAR(b.Evaluate(anchor), ShObjective(inst, anchor), 1e-9);
      for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        const ElementSet a = ElementSet::FromMask(n, mask);
        EXPECT_GE(b.Evaluate(a), oracle::Objective(inst, mask) - 1e-9);
      }
    }
  }
}

TEST(UnionSplitMaxTest, DeterministicSixth) {
  Rng rng = MakeRng(57);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + UniformIndex(rng, 10);
    const ShInstance inst = testing::RandomInstance(n, 1 + UniformIndex(rng, 4), rng);
    const Solution s = UnionSplitMax(inst);
    EXPECT_GE(s.value, oracle::MaxObjective(inst).value / 6.0 - 1e-9);
    EXPECT_FALSE(s.guarantee->in_expectation);
  }
}

TEST(UnionSplitMaxTest, CardinalityRespectsBudget) {
  Rng rng = MakeRng(58);
  const ShInstance inst = testing::RandomInstance(9, 3, rng, Constraint::AtMost(3));
  UnionSplitMaxOptions opt;
  opt.seed = 4;
  opt.draws = 20;
  const Solution s = UnionSplitMax(inst, opt);
  EXPECT_LE(s.set.size(), 3u);
  EXPECT_TRUE(s.guarantee->in_expectation);
  EXPECT_LE(*s.empirical_mean, s.value + 1e-12);
}

TEST(UnionSplitMaxTest, RejectsLowerBounds) {
  Rng rng = MakeRng(59);
  EXPECT_THROW(UnionSplitMax(testing::RandomInstance(5, 2, rng, Constraint::AtLeast(2))), UnsupportedConstraint);
}

TEST(RandSetMaxTest, EnumeratesSmallGroundSets) {
  Rng rng = MakeRng(60);
  const ShInstance inst = testing::RandomInstance(6, 2, rng);
  const Solution s = RandSetMax(inst, 1, 1000);
  EXPECT_EQ(s.iterations, 64u);
  double total = 0.0;
  for (oracle::Mask a = 0; a < 64; ++a) total += oracle::Objective(inst, a);
  EXPECT_NEAR(*s.empirical_mean, total / 64.0, 1e-9);
  EXPECT_NEAR(s.value, oracle::MaxObjective(inst).value, 1e-9);
}

TEST(CertifyTest, MajorMinBoundUsesTrueOptimum) {
  Rng rng = MakeRng(61);
  const ShInstance inst = testing::RandomInstance(7, 3, rng, Constraint::Exact(3));
  const Solution s = MajorMin(inst);
  const Certificate c = Certify(inst, s, Direction::kMin);
  const auto opt = oracle::MinObjective(inst);
  EXPECT_NEAR(c.optimum, opt.value, 1e-9);
  EXPECT_NEAR(*c.bound, oracle::CurvatureBound(inst, oracle::ToMask(c.optimum_set)), 1e-9);
  EXPECT_TRUE(c.pass);
}

TEST(CertifyTest, FailsWhenClaimIsViolated) {
  Solution bogus;
  bogus.solver = "test";
  bogus.set = ElementSet(3, {0, 1});
  bogus.value = ShObjective(Counterexample(), bogus.set);
  bogus.guarantee = Guarantee{1.0, "exact", false};
  const Certificate c = Certify(Counterexample(), bogus, Direction::kMin);
  EXPECT_TRUE(c.certified);
  EXPECT_FALSE(c.pass);
  EXPECT_NEAR(c.ratio, 4.0 / 3.0, 1e-12);
}

}  // namespace
}  // namespace shm
