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

// Set-function maximization: lazy greedy for monotone functions, the
// bi-directional (double) greedy and the randomized greedy for non-monotone
// submodular functions, uniformly random subsets, and exhaustive search.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "shmetric/constraint.hpp"
#include "shmetric/element_set.hpp"
#include "shmetric/minsolve.hpp"
#include "shmetric/rng.hpp"
#include "shmetric/set_function.hpp"

namespace shm {

struct TraceStep {
  static constexpr std::size_t kDummy = std::numeric_limits<std::size_t>::max();

  std::size_t element = kDummy;
  bool added = true;  // false: element dropped (double greedy) or dummy pick
  double marginal = 0.0;
};

struct MaxResult {
  ElementSet argmax;
  double value = 0.0;
  std::string method;
  std::optional<std::uint64_t> seed;
  std::vector<TraceStep> trace;
};

namespace detail {

inline void RequireCardinality(std::size_t k, std::size_t n) {
  if (k > n) {
    throw InfeasibleConstraint("cardinality " + std::to_string(k) + " exceeds ground set of size " +
                               std::to_string(n));
  }
}

}  // namespace detail

// Lazy greedy for monotone submodular f under |A| = k. Picks the largest
// gain each round, smallest index among ties; output matches naive greedy.
inline MaxResult GreedyMaxCard(const SetFunction& f, std::size_t k) {
  const std::size_t n = f.n();
  detail::RequireCardinality(k, n);
  struct Entry {
    double bound;
    std::size_t element;
    std::size_t round;
  };
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.element > b.element;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);

  MaxResult r;
  r.method = "lazy-greedy";
  r.argmax = ElementSet(n);
  double fx = f(r.argmax);
  for (std::size_t j = 0; j < n; ++j) heap.push({f.Gain(j, r.argmax), j, 0});
  for (std::size_t round = 0; round < k; ++round) {
    while (true) {
      Entry top = heap.top();
      heap.pop();
      if (top.round == round) {
        r.argmax.insert(top.element);
        fx += top.bound;
        r.trace.push_back({top.element, true, top.bound});
        break;
      }
      ElementSet xj = r.argmax;
      xj.insert(top.element);
      top.bound = f(xj) - fx;
      top.round = round;
      heap.push(top);
    }
    fx = f(r.argmax);
  }
  r.value = fx;
  return r;
}

// Plain greedy that always adds the best element (largest gain, smallest
// index) until |A| = k, accepting negative gains. No approximation guarantee
// for non-monotone f.
inline MaxResult GreedyRunToSize(const SetFunction& f, std::size_t k) {
  const std::size_t n = f.n();
  detail::RequireCardinality(k, n);
  MaxResult r;
  r.method = "greedy";
  r.argmax = ElementSet(n);
  double fx = f(r.argmax);
  for (std::size_t round = 0; round < k; ++round) {
    std::size_t best = TraceStep::kDummy;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (r.argmax.contains(j)) continue;
      ElementSet xj = r.argmax;
      xj.insert(j);
      const double g = f(xj) - fx;
      if (g > best_gain) {
        best_gain = g;
        best = j;
      }
    }
    r.argmax.insert(best);
    r.trace.push_back({best, true, best_gain});
    fx = f(r.argmax);
  }
  r.value = fx;
  return r;
}

// Double greedy over elements 0..n-1 with lower set X and upper set Y.
// Without a seed each element goes to X iff a >= b, where a = f(X + j) - f(X)
// and b = f(Y - j) - f(Y) (deterministic 1/3 guarantee). With a seed, j goes
// to X with probability a+ / (a+ + b+) (1/2 in expectation).
inline MaxResult BidirectionalGreedy(const SetFunction& f, std::optional<std::uint64_t> seed = std::nullopt) {
  const std::size_t n = f.n();
  MaxResult r;
  r.method = seed ? "double-greedy-randomized" : "double-greedy";
  r.seed = seed;
  std::optional<Rng> rng;
  if (seed) rng = MakeRng(*seed);
  ElementSet lower(n);
  ElementSet upper = ElementSet::Full(n);
  double f_lower = f(lower);
  double f_upper = f(upper);
  for (std::size_t j = 0; j < n; ++j) {
    ElementSet lj = lower;
    lj.insert(j);
    ElementSet uj = upper;
    uj.erase(j);
    const double f_lj = f(lj);
    const double f_uj = f(uj);
    const double a = f_lj - f_lower;
    const double b = f_uj - f_upper;
    bool keep;
    if (rng) {
      const double ap = std::max(a, 0.0), bp = std::max(b, 0.0);
      keep = ap + bp <= 0.0 ? true : UniformReal(*rng) < ap / (ap + bp);
    } else {
      keep = a >= b;
    }
    if (keep) {
      lower = std::move(lj);
      f_lower = f_lj;
      r.trace.push_back({j, true, a});
    } else {
      upper = std::move(uj);
      f_upper = f_uj;
      r.trace.push_back({j, false, b});
    }
  }
  r.argmax = lower;
  r.value = f(lower);
  return r;
}

// Randomized greedy for |A| <= k: each round ranks the remaining elements by
// marginal gain, keeps the top k with positive gain (dummy no-op slots fill
// the rest), and adds one slot chosen uniformly at random.
inline MaxResult RandomizedGreedyCard(const SetFunction& f, std::size_t k, std::uint64_t seed) {
  const std::size_t n = f.n();
  detail::RequireCardinality(k, n);
  MaxResult r;
  r.method = "randomized-greedy";
  r.seed = seed;
  r.argmax = ElementSet(n);
  if (k == 0) {
    r.value = f(r.argmax);
    return r;
  }
  Rng rng = MakeRng(seed);
  double fx = f(r.argmax);
  std::vector<std::pair<double, std::size_t>> gains;
  for (std::size_t round = 0; round < k; ++round) {
    gains.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (r.argmax.contains(j)) continue;
      ElementSet xj = r.argmax;
      xj.insert(j);
      gains.emplace_back(f(xj) - fx, j);
    }
    std::stable_sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::size_t real = 0;
    while (real < gains.size() && real < k && gains[real].first > 0.0) ++real;
    const std::size_t slot = UniformIndex(rng, k);
    if (slot < real) {
      r.argmax.insert(gains[slot].second);
      r.trace.push_back({gains[slot].second, true, gains[slot].first});
      fx = f(r.argmax);
    } else {
      r.trace.push_back({TraceStep::kDummy, false, 0.0});
    }
  }
  r.value = fx;
  return r;
}

// Each element included independently with probability 1/2.
inline ElementSet RandomSubset(std::size_t n, std::uint64_t seed) {
  Rng rng = MakeRng(seed);
  ElementSet s(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (FairCoin(rng)) s.insert(j);
  }
  return s;
}

// Exact maximum over admissible subsets; ties go to the smallest mask.
inline MaxResult BruteForceMax(const SetFunction& f, const Constraint& c = Constraint::Unconstrained()) {
  const std::size_t n = f.n();
  detail::RequireEnumerable(n);
  c.RequireFeasible(n);
  MaxResult r;
  r.method = "brute";
  r.value = -std::numeric_limits<double>::infinity();
  std::uint64_t best = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!c.Admits(static_cast<std::size_t>(std::popcount(mask)))) continue;
    const double v = f(ElementSet::FromMask(n, mask));
    if (v > r.value) {
      r.value = v;
      best = mask;
    }
  }
  r.argmax = ElementSet::FromMask(n, best);
  return r;
}

}  // namespace shm
