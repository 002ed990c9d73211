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


#include "shmetric/apps/kbest.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace shm::apps {
namespace {

PolymatroidSpec Quality(std::uint64_t seed) { return PolymatroidSpec::FacilityLocation(SynthSimilarity({}, seed)); }

TEST(SynthSimilarityTest, SymmetricUnitDiagonal) {
  const auto s = SynthSimilarity({}, 3);
  ASSERT_EQ(s.size(), 60u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_DOUBLE_EQ(s[i][i], 1.0);
    for (std::size_t j = 0; j < s.size(); ++j) {
      EXPECT_DOUBLE_EQ(s[i][j], s[j][i]);
      EXPECT_GE(s[i][j], 0.0);
    }
  }
}

TEST(DiverseKBestTest, SummariesHaveExactSize) {
  const PolymatroidSpec g = Quality(1);
  for (auto m : {KBestMethod::kSP, KBestMethod::kTP}) {
    const KBestResult r = DiverseKBest(g, g, 4, 10, m);
    ASSERT_EQ(r.summaries.size(), 4u);
    for (const auto& s : r.summaries) EXPECT_EQ(s.set.size(), 10u);
  }
  const KBestResult hm = DiverseKBest(g, Hamming(g.n()), 4, 10, KBestMethod::kHM);
  for (const auto& s : hm.summaries) EXPECT_EQ(s.set.size(), 10u);
}

TEST(DiverseKBestTest, BreakdownRevalidatesFromSets) {
  const PolymatroidSpec g = Quality(2);
  for (auto m : {KBestMethod::kHM, KBestMethod::kSP, KBestMethod::kTP}) {
    const PolymatroidSpec f = m == KBestMethod::kHM ? Hamming(g.n()) : g;
    const KBestResult r = DiverseKBest(g, f, 5, 8, m);
    for (std::size_t t = 0; t < r.summaries.size(); ++t) {
      const auto& s = r.summaries[t];
      const auto a = oracle::ToMask(s.set);
      EXPECT_NEAR(s.quality, oracle::Eval(g, a), 1e-9);
      double div = 0.0;
      for (std::size_t u = 0; u < t; ++u) div += oracle::Eval(f, a ^ oracle::ToMask(r.summaries[u].set));
      EXPECT_NEAR(s.diversity, div, 1e-9);
      EXPECT_NEAR(s.objective, s.quality + s.diversity, 1e-12);
    }
  }
}

TEST(DiverseKBestTest, SingleSummaryIgnoresDiversity) {
  const PolymatroidSpec g = Quality(3);
  const auto hm = DiverseKBest(g, Hamming(g.n()), 1, 10, KBestMethod::kHM);
  const auto tp = DiverseKBest(g, g, 1, 10, KBestMethod::kTP);
  EXPECT_EQ(hm.summaries[0].set, tp.summaries[0].set);
}

TEST(DiverseKBestTest, ZeroDiversityRepeatsGreedySummary) {
  const PolymatroidSpec g = Quality(4);
  const MaxResult top = GreedyMaxCard(g.AsFunction(), 10);
  const KBestResult r = DiverseKBest(g, std::nullopt, 3, 10, KBestMethod::kSP);
  for (const auto& s : r.summaries) {
    EXPECT_EQ(s.set, top.argmax);
    EXPECT_DOUBLE_EQ(s.diversity, 0.0);
    EXPECT_NEAR(s.quality, top.value, 1e-12);
  }
}

TEST(DiverseKBestTest, HammingFoldMatchesDirectObjective) {
  // HM folds the Hamming term into weights; SP with the same Hamming f
  // evaluates it directly. Both run the same greedy.
  const PolymatroidSpec g = Quality(5);
  const auto a = DiverseKBest(g, Hamming(g.n()), 4, 10, KBestMethod::kHM);
  const auto b = DiverseKBest(g, Hamming(g.n()), 4, 10, KBestMethod::kSP);
  for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(a.summaries[t].set, b.summaries[t].set);
}

TEST(DiverseKBestTest, OverlapMatrix) {
  const PolymatroidSpec g = Quality(6);
  const auto r = DiverseKBest(g, std::nullopt, 2, 5, KBestMethod::kSP);
  const auto m = r.OverlapMatrix();
  EXPECT_EQ(m[0][0], 5u);
  EXPECT_EQ(m[0][1], 5u);
  EXPECT_DOUBLE_EQ(r.MeanPairwiseOverlap(), 5.0);
}

TEST(DiverseKBestTest, InvalidArguments) {
  const PolymatroidSpec g = Quality(7);
  EXPECT_THROW(DiverseKBest(g, g, 2, 61, KBestMethod::kTP), InfeasibleConstraint);
  EXPECT_THROW(DiverseKBest(g, g, 0, 5, KBestMethod::kTP), std::invalid_argument);
  EXPECT_THROW(DiverseKBest(g, g, 2, 5, KBestMethod::kHM), std::invalid_argument);
}

}  // namespace
}  // namespace shm::apps
