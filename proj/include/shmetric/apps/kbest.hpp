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

// Diverse k-best subset selection:
//   A_t = argmax_{|A| = ell} g(A) + sum_{s < t} f(A ^ A_s),
// each step solved by greedy run to exactly ell elements.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shmetric/element_set.hpp"
#include "shmetric/maxsolve.hpp"
#include "shmetric/polymatroid.hpp"
#include "shmetric/rng.hpp"
#include "shmetric/set_function.hpp"

namespace shm::apps {

// HM: modular (weighted Hamming) diversity folded into one modular term.
// SP: greedy on g(A) + sum_s f(A ^ A_s) directly.
// TP: greedy on g(A) + sum_s [f(A - A_s) + f(A_s - A)] (the split surrogate).
enum class KBestMethod { kHM, kSP, kTP };

inline std::string_view KBestMethodName(KBestMethod m) {
  switch (m) {
    case KBestMethod::kHM: return "hm";
    case KBestMethod::kSP: return "sp";
    case KBestMethod::kTP: return "tp";
  }
  return "?";
}

struct KBestSummary {
  ElementSet set;
  double quality = 0.0;    // g(A_t)
  double diversity = 0.0;  // sum_{s<t} f(A_t ^ A_s), true distances
  double objective = 0.0;  // quality + diversity
};

struct KBestResult {
  KBestMethod method = KBestMethod::kHM;
  std::vector<KBestSummary> summaries;

  std::vector<std::vector<std::size_t>> OverlapMatrix() const {
    const std::size_t k = summaries.size();
    std::vector<std::vector<std::size_t>> m(k, std::vector<std::size_t>(k, 0));
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) m[s][t] = (summaries[s].set & summaries[t].set).size();
    }
    return m;
  }

  // Mean |A_s n A_t| over pairs s < t; zero when k < 2.
  double MeanPairwiseOverlap() const {
    const std::size_t k = summaries.size();
    if (k < 2) return 0.0;
    double total = 0.0;
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = s + 1; t < k; ++t) total += static_cast<double>((summaries[s].set & summaries[t].set).size());
    }
    return total / static_cast<double>(k * (k - 1) / 2);
  }
};

// `diversity` empty means f = 0. HM requires a Modular diversity function.
// Greedy is deterministic; `seed` is recorded only.
inline KBestResult DiverseKBest(const PolymatroidSpec& quality, const std::optional<PolymatroidSpec>& diversity,
                                std::size_t k, std::size_t ell, KBestMethod method, std::uint64_t seed = 0) {
  (void)seed;
  const std::size_t n = quality.n();
  if (ell > n) throw InfeasibleConstraint("summary size exceeds the ground set");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (diversity && diversity->n() != n) throw DimensionMismatch("quality and diversity disagree on n");
  if (method == KBestMethod::kHM && diversity && diversity->kind() != PolymatroidSpec::Kind::kModular) {
    throw std::invalid_argument("HM needs a modular (Hamming) diversity function");
  }
  auto g = std::make_shared<const PolymatroidSpec>(quality);
  std::shared_ptr<const PolymatroidSpec> f;
  if (diversity) f = std::make_shared<const PolymatroidSpec>(*diversity);

  KBestResult result;
  result.method = method;
  auto previous = std::make_shared<std::vector<ElementSet>>();
  for (std::size_t t = 0; t < k; ++t) {
    SetFunction objective;
    if (!f) {
      objective = SetFunction(n, [g](const ElementSet& a) { return g->Evaluate(a); }, "g");
    } else if (method == KBestMethod::kHM) {
      // sum_s w(A ^ A_s) = offset + sum_{j in A} w_A(j)
      const auto& w = std::get<ModularParams>(f->params()).weights;
      double offset = 0.0;
      std::vector<double> folded(n, 0.0);
      for (const auto& prev : *previous) {
        for (std::size_t j = 0; j < n; ++j) {
          if (prev.contains(j)) {
            offset += w[j];
            folded[j] -= w[j];
          } else {
            folded[j] += w[j];
          }
        }
      }
      objective = SetFunction(n, [g, folded, offset](const ElementSet& a) {
        double s = g->Evaluate(a) + offset;
        a.ForEach([&](std::size_t j) { s += folded[j]; });
        return s;
      }, "g+hamming");
    } else if (method == KBestMethod::kSP) {
      const auto prev = std::make_shared<const std::vector<ElementSet>>(*previous);
      objective = SetFunction(n, [g, f, prev](const ElementSet& a) {
        double s = g->Evaluate(a);
        for (const auto& p : *prev) s += f->Evaluate(a ^ p);
        return s;
      }, "g+sh");
    } else {
      const auto prev = std::make_shared<const std::vector<ElementSet>>(*previous);
      objective = SetFunction(n, [g, f, prev](const ElementSet& a) {
        double s = g->Evaluate(a);
        for (const auto& p : *prev) s += f->Evaluate(a - p) + f->Evaluate(p - a);
        return s;
      }, "g+split");
    }
    const MaxResult r = GreedyRunToSize(objective, ell);
    KBestSummary summary;
    summary.set = r.argmax;
    summary.quality = quality.Evaluate(r.argmax);
    if (f) {
      for (const auto& p : *previous) summary.diversity += f->Evaluate(r.argmax ^ p);
    }
    summary.objective = summary.quality + summary.diversity;
    previous->push_back(r.argmax);
    result.summaries.push_back(std::move(summary));
  }
  return result;
}

struct SynthCollectionParams {
  std::size_t n = 60;
  std::size_t dims = 8;
  std::size_t topics = 6;
  double noise = 0.1;      // per-coordinate std of items around their topic center
  double bandwidth = 0.2;  // RBF kernel width
};

// Items scattered around random topic centers in the unit cube; similarity
// is the Gaussian kernel exp(-|x_i - x_j|^2 / (2 h^2)), so S is symmetric
// with unit diagonal and near zero across distant topics.
inline std::vector<std::vector<double>> SynthSimilarity(const SynthCollectionParams& p, std::uint64_t seed) {
  if (p.n == 0 || p.dims == 0 || p.topics == 0) throw std::invalid_argument("collection sizes must be positive");
  if (!(p.bandwidth > 0.0) || p.noise < 0.0) throw std::invalid_argument("bandwidth must be > 0 and noise >= 0");
  Rng rng = MakeRng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> centers(p.topics, std::vector<double>(p.dims));
  for (auto& c : centers) {
    for (double& v : c) v = UniformReal(rng);
  }
  std::vector<std::vector<double>> items(p.n, std::vector<double>(p.dims));
  for (auto& item : items) {
    const auto& c = centers[UniformIndex(rng, p.topics)];
    for (std::size_t d = 0; d < p.dims; ++d) item[d] = c[d] + p.noise * gauss(rng);
  }
  std::vector<std::vector<double>> sim(p.n, std::vector<double>(p.n, 0.0));
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      double d2 = 0.0;
      for (std::size_t d = 0; d < p.dims; ++d) d2 += (items[i][d] - items[j][d]) * (items[i][d] - items[j][d]);
      sim[i][j] = std::exp(-d2 / (2.0 * p.bandwidth * p.bandwidth));
    }
  }
  return sim;
}

}  // namespace shm::apps
