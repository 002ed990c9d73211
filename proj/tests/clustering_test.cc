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


#include "shmetric/apps/clustering.hpp"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace shm::apps {
namespace {

TEST(SynthCorpusTest, DisjointPresetShape) {
  const Corpus c = SynthCorpus({}, 7);
  EXPECT_EQ(c.n, 1000u);
  ASSERT_EQ(c.size(), 100u);
  ASSERT_TRUE(c.labels.has_value());
  ASSERT_TRUE(c.word_classes.has_value());
  EXPECT_EQ(c.word_classes->size(), 100u);
  std::vector<std::size_t> per_cluster(10, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(c.docs[i].size(), 10u);
    ++per_cluster[(*c.labels)[i]];
  }
  for (std::size_t count : per_cluster) EXPECT_EQ(count, 10u);
  // Disjoint: one word from each of the cluster's ten classes.
  const PolymatroidSpec f = c.ClusteredSqrt();
  for (const auto& d : c.docs) EXPECT_DOUBLE_EQ(f.Evaluate(d), 10.0);
}

TEST(SynthCorpusTest, DocumentsStayInsideTheirClusterVocabulary) {
  for (auto overlap : {SynthCorpusParams::Overlap::kDisjoint, SynthCorpusParams::Overlap::kSampled}) {
    SynthCorpusParams p;
    p.overlap = overlap;
    const Corpus c = SynthCorpus(p, 3);
    std::vector<std::size_t> class_of(c.n);
    for (std::size_t w = 0; w < c.word_classes->size(); ++w) {
      for (std::size_t j : (*c.word_classes)[w]) class_of[j] = w;
    }
    // Classes that appear with each label must be a set of exactly ten.
    std::vector<std::set<std::size_t>> classes_per_label(10);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(c.docs[i].size(), 10u);
      c.docs[i].ForEach([&](std::size_t j) { classes_per_label[(*c.labels)[i]].insert(class_of[j]); });
    }
    std::set<std::size_t> all;
    for (const auto& s : classes_per_label) {
      EXPECT_LE(s.size(), 10u);
      all.insert(s.begin(), s.end());
    }
    std::size_t total = 0;
    for (const auto& s : classes_per_label) total += s.size();
    EXPECT_EQ(all.size(), total);  // no class shared between clusters
  }
}

TEST(SynthCorpusTest, SeedReproducible) {
  const Corpus a = SynthCorpus({}, 5), b = SynthCorpus({}, 5), c = SynthCorpus({}, 6);
  EXPECT_EQ(a.docs, b.docs);
  EXPECT_NE(a.docs, c.docs);
}

TEST(SynthCorpusTest, RejectsInconsistentParameters) {
  SynthCorpusParams p;
  p.num_word_classes = 95;
  EXPECT_THROW(SynthCorpus(p, 1), std::invalid_argument);
}

TEST(AccuracyTest, PermutationInvariantExhaustive) {
  const std::vector<std::size_t> truth = {0, 0, 1, 1, 2, 2, 3, 4, 5, 5, 1, 0};
  std::vector<std::size_t> perm = {0, 1, 2, 3, 4, 5};
  do {
    std::vector<std::size_t> pred(truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i) pred[i] = perm[truth[i]];
    EXPECT_DOUBLE_EQ(Accuracy(pred, truth), 1.0);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(AccuracyTest, MatchesPermutationOracle) {
  Rng rng = MakeRng(71);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t k = 1 + UniformIndex(rng, 6);
    std::vector<std::size_t> pred(30), truth(30);
    for (std::size_t i = 0; i < 30; ++i) {
      pred[i] = UniformIndex(rng, k);
      truth[i] = UniformIndex(rng, k);
    }
    pred[0] = truth[0] = k - 1;
    EXPECT_NEAR(Accuracy(pred, truth), oracle::MatchingAccuracy(pred, truth, k), 1e-12);
  }
}

TEST(AccuracyTest, SwappedClustersAreCorrect) {
  EXPECT_DOUBLE_EQ(Accuracy({1, 1, 0, 0}, {0, 0, 1, 1}), 1.0);
  EXPECT_THROW(Accuracy({0, 1}, {0}), DimensionMismatch);
}

TEST(AccuracyTest, RandomBalancedAssignmentNearOneTenth) {
  // Monte Carlo baseline: a uniformly random balanced relabeling scores a
  // little above 1/k because the matching picks the best agreement.
  Rng rng = MakeRng(72);
  std::vector<std::size_t> truth(100);
  for (std::size_t i = 0; i < 100; ++i) truth[i] = i / 10;
  double sum = 0.0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::size_t> pred = truth;
    std::shuffle(pred.begin(), pred.end(), rng);
    sum += Accuracy(pred, truth);
  }
  EXPECT_GT(sum / trials, 0.1);
  EXPECT_LT(sum / trials, 0.3);
}

TEST(ShCentroidTest, HammingCentroidIsMajorityVote) {
  // Words used by more than half the documents, topped up to ell.
  const std::vector<ElementSet> docs = {ElementSet(6, {0, 1}), ElementSet(6, {0, 2}), ElementSet(6, {0, 1, 3})};
  const ElementSet mu = ShCentroid(docs, Hamming(6), 0);
  EXPECT_EQ(mu, ElementSet(6, {0, 1}));
  const ElementSet big = ShCentroid(docs, Hamming(6), 4);
  EXPECT_EQ(big.size(), 4u);
  EXPECT_TRUE(ElementSet(6, {0, 1}).IsSubsetOf(big));
}

TEST(ShCentroidTest, RespectsMinimumSize) {
  const Corpus c = SynthCorpus({}, 9);
  const std::vector<ElementSet> docs(c.docs.begin(), c.docs.begin() + 10);
  EXPECT_GE(ShCentroid(docs, c.ClusteredSqrt(), 100).size(), 100u);
  EXPECT_GE(ShCentroid(docs, Hamming(c.n), 100).size(), 100u);
}

TEST(ShKMeansTest, BalancedPartitionAndCenterSizes) {
  const Corpus c = SynthCorpus({}, 11);
  KMeansOptions opt;
  opt.seed = 3;
  const ClusteringResult r = ShKMeans(c, c.ClusteredSqrt(), opt);
  ASSERT_EQ(r.assignment.size(), 100u);
  for (const auto& members : r.Clusters()) EXPECT_EQ(members.size(), 10u);
  for (const auto& mu : r.centers) EXPECT_GE(mu.size(), 100u);
  EXPECT_EQ(r.objective_trace.size() + (r.converged ? 1 : 0), r.iterations);
}

TEST(ShKMeansTest, ObjectiveNonincreasingWithoutQuota) {
  // Without the balance quota every step is a k-means descent step.
  const Corpus c = SynthCorpus({}, 13);
  KMeansOptions opt;
  opt.quota = c.size();
  opt.seed = 4;
  const ClusteringResult r = ShKMeans(c, c.ClusteredSqrt(), opt);
  for (std::size_t t = 1; t < r.objective_trace.size(); ++t) {
    EXPECT_LE(r.objective_trace[t], r.objective_trace[t - 1] + 1e-9);
  }
}

TEST(ShKMeansTest, SingleClusterIsPerfect) {
  SynthCorpusParams p;
  p.num_clusters = 1;
  p.num_docs = 20;
  p.num_word_classes = 10;
  p.n = 200;
  const Corpus c = SynthCorpus(p, 2);
  KMeansOptions opt;
  opt.k = 1;
  const ClusteringResult r = ShKMeans(c, c.ClusteredSqrt(), opt);
  EXPECT_DOUBLE_EQ(Accuracy(r, c), 1.0);
}

TEST(ShKMeansTest, FarthestFirstRecoversDisjointClusters) {
  const Corpus c = SynthCorpus({}, 17);
  KMeansOptions opt;
  opt.init = InitMethod::kFarthestFirst;
  opt.seed = 1;
  EXPECT_DOUBLE_EQ(Accuracy(ShKMeans(c, c.ClusteredSqrt(), opt), c), 1.0);
}

TEST(ShKMeansTest, SeedReproducible) {
  const Corpus c = SynthCorpus({}, 19);
  KMeansOptions opt;
  opt.seed = 8;
  opt.order = AssignOrder::kShuffled;
  EXPECT_EQ(ShKMeans(c, Hamming(c.n), opt).assignment, ShKMeans(c, Hamming(c.n), opt).assignment);
}

TEST(ShKMeansTest, InfeasibleSizes) {
  const Corpus c = SynthCorpus({}, 1);
  KMeansOptions opt;
  opt.k = 101;
  EXPECT_THROW(ShKMeans(c, Hamming(c.n), opt), InfeasibleConstraint);
  opt.k = 10;
  opt.ell = 1001;
  EXPECT_THROW(ShKMeans(c, Hamming(c.n), opt), InfeasibleConstraint);
}

TEST(KMeansScoreTest, ZeroForSingletonClustersAtTheirDocuments) {
  const Corpus c = SynthCorpus({}, 23);
  ClusteringResult r;
  r.k = c.size();
  r.centers = c.docs;
  for (std::size_t i = 0; i < c.size(); ++i) r.assignment.push_back(i);
  EXPECT_DOUBLE_EQ(KMeansScore(r, c, Hamming(c.n)), 0.0);
  EXPECT_DOUBLE_EQ(KMeansScore(r, c, c.ClusteredSqrt()), 0.0);
}

TEST(KMeansScoreTest, HammingAndSubmodularDiffer) {
  const Corpus c = SynthCorpus({}, 29);
  KMeansOptions opt;
  opt.seed = 2;
  const ClusteringResult r = ShKMeans(c, Hamming(c.n), opt);
  const double ham = KMeansScore(r, c, Hamming(c.n));
  const double sub = KMeansScore(r, c, c.ClusteredSqrt());
  EXPECT_GT(ham, 0.0);
  EXPECT_GT(sub, 0.0);
  EXPECT_NE(ham, sub);
}

}  // namespace
}  // namespace shm::apps
