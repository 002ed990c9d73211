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


#include "shmetric/checks.hpp"

#include <cmath>

#include "generators.hpp"
#include "gtest/gtest.h"

namespace shm {
namespace {

TEST(CheckPolymatroidTest, BuiltInVariantsPass) {
  Rng rng = MakeRng(21);
  for (std::size_t kind = 0; kind < testing::kNumKinds; ++kind) {
    const PolymatroidSpec f = testing::RandomSpec(7, kind, rng);
    const PropertyReport r = CheckPolymatroid(f);
    EXPECT_TRUE(r.AllPass()) << f.KindName();
    EXPECT_EQ(r.submodular_violations, 0u);
  }
}

TEST(CheckPolymatroidTest, RandomizedModeRecordsSeed) {
  Rng rng = MakeRng(22);
  const PolymatroidSpec f = testing::RandomSpec(20, 3, rng);
  const PropertyReport r = CheckPolymatroid(f, CheckOptions::Randomized(2000, 99));
  EXPECT_TRUE(r.AllPass());
  EXPECT_EQ(r.seed, 99u);
  EXPECT_EQ(r.mode, CheckOptions::Mode::kRandomized);
}

TEST(CheckPolymatroidTest, ShiftedSqrtIsNotSubmodular) {
  const auto f = PolymatroidSpec::ConcaveCardinality(3, 2.0);
  const PropertyReport r = CheckPolymatroid(ShiftedOracle(f, ElementSet(3, {0, 1})));
  EXPECT_FALSE(r.submodular);
  ASSERT_FALSE(r.submodular_witnesses.empty());
  const SubmodularWitness& w = r.submodular_witnesses.front();
  EXPECT_EQ(w.a1, ElementSet(3, {0}));
  EXPECT_EQ(w.a2, ElementSet(3, {2}));
  EXPECT_NEAR(w.lhs, 1.0 + std::sqrt(3.0), 1e-9);
  EXPECT_NEAR(w.rhs, 2.0 * std::sqrt(2.0), 1e-9);
  // g_B(empty) = f(B) > 0 and g_B(B) = 0.
  EXPECT_FALSE(r.normalized);
  EXPECT_FALSE(r.monotone);
}

TEST(CheckPolymatroidTest, DetectsNegativeWeights) {
  const auto f = PolymatroidSpec::UncheckedModular({1.0, -1.0});
  const PropertyReport r = CheckPolymatroid(f);
  EXPECT_FALSE(r.monotone);
  EXPECT_FALSE(r.positive);
  EXPECT_TRUE(r.submodular);
  ASSERT_TRUE(r.positive_witness.has_value());
  EXPECT_EQ(*r.positive_witness, ElementSet(2, {1}));
}

TEST(CheckPolymatroidTest, DetectsSupermodularity) {
  const SetFunction square(4, [](const ElementSet& a) {
    const double s = static_cast<double>(a.size());
    return s * s;
  });
  const PropertyReport r = CheckPolymatroid(square);
  EXPECT_TRUE(r.monotone);
  EXPECT_FALSE(r.submodular);
  EXPECT_GT(r.submodular_violations, 0u);
}

TEST(CheckPolymatroidTest, ExhaustiveLimitEnforced) {
  const auto f = PolymatroidSpec::ConcaveCardinality(20, 2.0);
  EXPECT_THROW(CheckPolymatroid(f), std::invalid_argument);
}

TEST(MetricAxiomTest, BuiltInVariantsAreMetrics) {
  Rng rng = MakeRng(23);
  for (std::size_t kind = 0; kind < testing::kNumKinds; ++kind) {
    const PolymatroidSpec f = testing::RandomSpec(5, kind, rng);
    const MetricReport r = MetricAxiomCheck(f);
    EXPECT_TRUE(r.AllPass()) << f.KindName();
    EXPECT_EQ(r.checked, 32u * 32u * 32u);
  }
}

TEST(MetricAxiomTest, NonMonotoneFunctionBreaksTriangle) {
  // Singletons cost 1 and the pair 5: d({0}, {1}) = 5 > d({0}, {}) + d({}, {1}) = 2.
  const SetFunction bumpy(2, [](const ElementSet& y) {
    if (y.empty()) return 0.0;
    return y.size() == 1 ? 1.0 : 5.0;
  });
  const MetricReport r = MetricAxiomCheck(bumpy);
  EXPECT_FALSE(r.AllPass());
  EXPECT_FALSE(r.Holds(MetricAxiom::kTriangle));
  EXPECT_TRUE(r.Holds(MetricAxiom::kSymmetry));
}

TEST(MetricAxiomTest, ZeroOnNonemptySetBreaksIdentity) {
  const SetFunction flat(3, [](const ElementSet& y) { return y.contains(0) ? 1.0 : 0.0; });
  const MetricReport r = MetricAxiomCheck(flat);
  EXPECT_FALSE(r.Holds(MetricAxiom::kIdentity));
}

TEST(MetricAxiomTest, RandomizedModeOnLargerGroundSet) {
  Rng rng = MakeRng(24);
  const PolymatroidSpec f = testing::RandomSpec(30, 2, rng);
  const MetricReport r = MetricAxiomCheck(f, CheckOptions::Randomized(3000, 5));
  EXPECT_TRUE(r.AllPass());
  EXPECT_EQ(r.checked, 3000u);
}

}  // namespace
}  // namespace shm
