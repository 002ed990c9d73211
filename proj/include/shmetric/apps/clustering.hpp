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

// k-means over feature sets with a submodular Hamming distance: centroids
// solve min_{|A| >= ell} sum_{i in C_j} f(A ^ B_i) and the assignment step
// respects a per-cluster quota.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shmetric/apps/corpus.hpp"
#include "shmetric/constraint.hpp"
#include "shmetric/element_set.hpp"
#include "shmetric/instance.hpp"
#include "shmetric/minsolve.hpp"
#include "shmetric/polymatroid.hpp"
#include "shmetric/rng.hpp"
#include "shmetric/shsolvers.hpp"

namespace shm::apps {

// Centroid of a group of documents under d_f with |A| >= ell. Modular f is
// solved exactly through its weight representation; any other f by
// Major-Min, which also considers `warm` as a starting point so the result is
// never worse than it.
inline ElementSet ShCentroid(const std::vector<ElementSet>& docs, const PolymatroidSpec& f, std::size_t ell,
                             const std::optional<ElementSet>& warm = std::nullopt) {
  if (docs.empty()) throw std::invalid_argument("centroid of an empty cluster");
  if (ell > f.n()) throw InfeasibleConstraint("centroid size exceeds the feature universe");
  const ShInstance inst = ShInstance::Homogeneous(f, docs, Constraint::AtLeast(ell));
  if (f.kind() == PolymatroidSpec::Kind::kModular) {
    const ModularBound exact = SingletonBound(inst);  // exact for modular f
    return ModularMin(exact.weights, exact.offset, inst.constraint()).argmin;
  }
  MajorMinOptions opt;
  opt.warm_start = warm;
  return MajorMin(inst, opt).set;
}

enum class InitMethod { kKMeansPlusPlus, kFarthestFirst };

// Order in which documents claim quota slots during assignment.
enum class AssignOrder { kCorpus, kShuffled };

struct KMeansOptions {
  std::size_t k = 10;
  std::size_t ell = 100;
  InitMethod init = InitMethod::kKMeansPlusPlus;
  std::size_t quota = 0;  // 0 -> ceil(num_docs / k)
  std::size_t max_iter = 50;
  AssignOrder order = AssignOrder::kCorpus;
  std::uint64_t seed = 0;
};

struct ClusteringResult {
  std::size_t k = 0;
  std::vector<ElementSet> centers;
  std::vector<std::size_t> assignment;  // cluster index per document
  std::vector<double> objective_trace;  // sum_j sum_{i in C_j} f(mu_j ^ B_i) after each centroid step
  std::size_t iterations = 0;
  bool converged = false;

  std::vector<std::vector<std::size_t>> Clusters() const {
    std::vector<std::vector<std::size_t>> out(k);
    for (std::size_t i = 0; i < assignment.size(); ++i) out[assignment[i]].push_back(i);
    return out;
  }
};

namespace detail {

inline std::vector<ElementSet> InitCenters(const Corpus& corpus, const PolymatroidSpec& f, std::size_t k,
                                           InitMethod init, Rng& rng) {
  const std::size_t num = corpus.size();
  std::vector<ElementSet> centers;
  std::vector<double> nearest(num, std::numeric_limits<double>::infinity());
  auto absorb = [&](const ElementSet& c) {
    centers.push_back(c);
    for (std::size_t i = 0; i < num; ++i) nearest[i] = std::min(nearest[i], MetricDistance(f, c, corpus.docs[i]));
  };
  if (init == InitMethod::kFarthestFirst) {
    absorb(corpus.docs[0]);
    while (centers.size() < k) {
      std::size_t far = 0;
      for (std::size_t i = 1; i < num; ++i) {
        if (nearest[i] > nearest[far]) far = i;
      }
      absorb(corpus.docs[far]);
    }
    return centers;
  }
  absorb(corpus.docs[UniformIndex(rng, num)]);
  while (centers.size() < k) {
    double total = 0.0;
    for (double d : nearest) total += d * d;
    std::size_t pick = 0;
    if (total <= 0.0) {
      pick = UniformIndex(rng, num);
    } else {
      double u = UniformReal(rng) * total;
      pick = num - 1;
      for (std::size_t i = 0; i < num; ++i) {
        u -= nearest[i] * nearest[i];
        if (u < 0.0) {
          pick = i;
          break;
        }
      }
    }
    absorb(corpus.docs[pick]);
  }
  return centers;
}

}  // namespace detail

// Balanced assignment: each document, in corpus or seeded shuffled order,
// joins the nearest center that has not reached the quota. Equidistant
// centers are chosen uniformly at random. Returns the cluster index per
// document.
inline std::vector<std::size_t> BalancedAssign(const Corpus& corpus, const PolymatroidSpec& f,
                                               const std::vector<ElementSet>& centers, std::size_t quota,
                                               AssignOrder order_kind, Rng& rng) {
  const std::size_t num = corpus.size();
  const std::size_t k = centers.size();
  std::vector<std::size_t> order(num);
  std::iota(order.begin(), order.end(), 0);
  if (order_kind == AssignOrder::kShuffled) std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> sizes(k, 0);
  std::vector<std::size_t> assignment(num, 0);
  for (std::size_t i : order) {
    std::size_t best = k;
    double best_d = std::numeric_limits<double>::infinity();
    std::size_t ties = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] >= quota) continue;
      const double d = MetricDistance(f, centers[c], corpus.docs[i]);
      if (d < best_d - 1e-9) {
        best_d = d;
        best = c;
        ties = 1;
      } else if (d <= best_d + 1e-9) {
        ++ties;
        if (UniformIndex(rng, ties) == 0) best = c;
      }
    }
    assignment[i] = best;
    ++sizes[best];
  }
  return assignment;
}

inline double ClusteringObjective(const Corpus& corpus, const PolymatroidSpec& g, const std::vector<ElementSet>& centers,
                                  const std::vector<std::size_t>& assignment) {
  double s = 0.0;
  for (std::size_t i = 0; i < assignment.size(); ++i) s += MetricDistance(g, centers[assignment[i]], corpus.docs[i]);
  return s;
}

inline ClusteringResult ShKMeans(const Corpus& corpus, const PolymatroidSpec& f, const KMeansOptions& opt) {
  corpus.Validate();
  const std::size_t num = corpus.size();
  if (opt.k == 0 || opt.k > num) throw InfeasibleConstraint("k must lie in [1, number of documents]");
  if (opt.ell > corpus.n) throw InfeasibleConstraint("ell exceeds the feature universe");
  if (f.n() != corpus.n) throw DimensionMismatch("distance function and corpus disagree on n");
  const std::size_t quota = opt.quota != 0 ? opt.quota : (num + opt.k - 1) / opt.k;
  if (quota * opt.k < num) throw InfeasibleConstraint("quota * k must cover every document");

  Rng rng = MakeRng(opt.seed);
  ClusteringResult r;
  r.k = opt.k;
  r.centers = detail::InitCenters(corpus, f, opt.k, opt.init, rng);
  std::vector<std::size_t> previous;
  for (std::size_t it = 0; it < opt.max_iter; ++it) {
    r.assignment = BalancedAssign(corpus, f, r.centers, quota, opt.order, rng);
    r.iterations = it + 1;
    if (r.assignment == previous) {
      r.converged = true;
      break;
    }
    previous = r.assignment;
    const auto clusters = r.Clusters();
    for (std::size_t c = 0; c < opt.k; ++c) {
      if (clusters[c].empty()) {
        // Re-seed with the document farthest from its own center.
        std::size_t far = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < num; ++i) {
          const double d = MetricDistance(f, r.centers[r.assignment[i]], corpus.docs[i]);
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        r.centers[c] = corpus.docs[far];
        continue;
      }
      std::vector<ElementSet> members;
      for (std::size_t i : clusters[c]) members.push_back(corpus.docs[i]);
      r.centers[c] = ShCentroid(members, f, opt.ell, r.centers[c]);
    }
    r.objective_trace.push_back(ClusteringObjective(corpus, f, r.centers, r.assignment));
  }
  return r;
}

// Maximum-weight perfect matching on a square profit matrix (Hungarian
// method, O(k^3)). Returns column assigned to each row.
inline std::vector<std::size_t> MaxWeightMatching(const std::vector<std::vector<double>>& profit) {
  const std::size_t k = profit.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Potentials-based shortest augmenting path on costs = -profit, 1-indexed.
  std::vector<double> u(k + 1, 0.0), v(k + 1, 0.0);
  std::vector<std::size_t> match_col(k + 1, 0), way(k + 1, 0);
  for (std::size_t row = 1; row <= k; ++row) {
    match_col[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(k + 1, kInf);
    std::vector<bool> used(k + 1, false);
    do {
      used[col0] = true;
      const std::size_t row0 = match_col[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= k; ++col) {
        if (used[col]) continue;
        const double cur = -profit[row0 - 1][col - 1] - u[row0] - v[col];
        if (cur < minv[col]) {
          minv[col] = cur;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= k; ++col) {
        if (used[col]) {
          u[match_col[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match_col[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match_col[col0] = match_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<std::size_t> assignment(k, 0);
  for (std::size_t col = 1; col <= k; ++col) {
    if (match_col[col] != 0) assignment[match_col[col] - 1] = col - 1;
  }
  return assignment;
}

// Fraction of documents on which predicted and true clusters agree under the
// best one-to-one relabeling of the predicted clusters.
inline double Accuracy(const std::vector<std::size_t>& predicted, const std::vector<std::size_t>& truth) {
  if (predicted.size() != truth.size()) throw DimensionMismatch("accuracy: label vectors differ in length");
  if (predicted.empty()) return 1.0;
  const std::size_t kp = *std::max_element(predicted.begin(), predicted.end()) + 1;
  const std::size_t kt = *std::max_element(truth.begin(), truth.end()) + 1;
  const std::size_t k = std::max(kp, kt);
  std::vector<std::vector<double>> table(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < predicted.size(); ++i) table[predicted[i]][truth[i]] += 1.0;
  const auto match = MaxWeightMatching(table);
  double agree = 0.0;
  for (std::size_t r = 0; r < k; ++r) agree += table[r][match[r]];
  return agree / static_cast<double>(predicted.size());
}

inline double Accuracy(const ClusteringResult& result, const Corpus& corpus) {
  if (!corpus.labels) throw std::invalid_argument("corpus has no true labels");
  return Accuracy(result.assignment, *corpus.labels);
}

// sum_j sum_{i in C_j} g(mu_j ^ B_i)
inline double KMeansScore(const ClusteringResult& result, const Corpus& corpus, const PolymatroidSpec& g) {
  return ClusteringObjective(corpus, g, result.centers, result.assignment);
}

}  // namespace shm::apps
