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

// Set-function minimization: exhaustive search, the Lovasz extension,
// Fujishige-Wolfe minimum-norm-point for unconstrained submodular
// minimization, and exact modular minimization under cardinality
// constraints.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "shmetric/constraint.hpp"
#include "shmetric/element_set.hpp"
#include "shmetric/set_function.hpp"

namespace shm {

inline constexpr std::size_t kBruteForceLimit = 22;

class GroundSetTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MinResult {
  ElementSet argmin;
  double value = 0.0;
  std::string method;
  std::size_t iterations = 0;
  double gap = 0.0;  // value minus a certified lower bound; 0 for exact methods
  bool exact = false;
};

namespace detail {

inline void RequireEnumerable(std::size_t n) {
  if (n > kBruteForceLimit) {
    throw GroundSetTooLarge("exhaustive search limited to n <= " + std::to_string(kBruteForceLimit) + ", got " +
                            std::to_string(n));
  }
}

}  // namespace detail

// Exact minimum over all admissible subsets; ties go to the smallest mask.
inline MinResult BruteForceMin(const SetFunction& f, const Constraint& c = Constraint::Unconstrained()) {
  const std::size_t n = f.n();
  detail::RequireEnumerable(n);
  c.RequireFeasible(n);
  MinResult r;
  r.method = "brute";
  r.exact = true;
  r.value = std::numeric_limits<double>::infinity();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!c.Admits(static_cast<std::size_t>(std::popcount(mask)))) continue;
    const double v = f(ElementSet::FromMask(n, mask));
    ++r.iterations;
    if (v < r.value) {
      r.value = v;
      best = mask;
    }
  }
  r.argmin = ElementSet::FromMask(n, best);
  return r;
}

struct LovaszPoint {
  std::vector<double> x;
  double value = 0.0;
  std::vector<double> subgradient;  // greedy vertex of the base polytope for the order of x
};

// Lovasz extension of a normalized f at x in [0,1]^n. Coordinates are sorted
// nonincreasingly, ties by element index.
inline LovaszPoint LovaszEval(const SetFunction& f, std::span<const double> x) {
  const std::size_t n = f.n();
  if (x.size() != n) throw DimensionMismatch("LovaszEval: point has wrong dimension");
  for (double v : x) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::out_of_range("LovaszEval: coordinates must lie in [0, 1]");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  LovaszPoint p;
  p.x.assign(x.begin(), x.end());
  p.subgradient.assign(n, 0.0);
  ElementSet prefix(n);
  double prev = f(prefix);
  for (std::size_t j : order) {
    prefix.insert(j);
    const double cur = f(prefix);
    p.subgradient[j] = cur - prev;
    p.value += x[j] * (cur - prev);
    prev = cur;
  }
  return p;
}

struct MinNormOptions {
  double tol = 1e-7;
  std::size_t max_iterations = 0;  // 0 -> 10 n^2 (at least 100)
};

// Unconstrained minimization of a submodular f via the Fujishige-Wolfe
// minimum-norm-point algorithm on the base polytope of f - f(empty).
// Every major iteration scans the level sets of the current point; the run
// stops once the best level set is within tol of the lower bound
// sum_j min(x_j, 0).
inline MinResult SubmodularMinUnconstrained(const SetFunction& f, const MinNormOptions& opt = {}) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  const std::size_t n = f.n();
  MinResult r;
  r.method = "min-norm-point";
  const double f_empty = f(ElementSet(n));
  if (n == 0) {
    r.argmin = ElementSet(0);
    r.value = f_empty;
    r.exact = true;
    return r;
  }
  const std::size_t cap = opt.max_iterations != 0 ? opt.max_iterations : std::max<std::size_t>(100, 10 * n * n);

  std::vector<std::size_t> order(n);
  std::vector<double> prefix_vals(n + 1);
  ElementSet best_set(n);
  double best_val = std::numeric_limits<double>::infinity();

  // Greedy vertex for ascending x (minimizes <x, q> over the base polytope);
  // records the level-set values as a side effect.
  auto greedy_vertex = [&](const VectorXd& x, VectorXd& q) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    ElementSet prefix(n);
    double prev = 0.0;
    prefix_vals[0] = 0.0;
    q.resize(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
      prefix.insert(order[k]);
      const double cur = f(prefix) - f_empty;
      q[static_cast<Eigen::Index>(order[k])] = cur - prev;
      prefix_vals[k + 1] = cur;
      prev = cur;
    }
    // smallest minimizing prefix
    std::size_t arg = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (prefix_vals[k] < prefix_vals[arg]) arg = k;
    }
    if (prefix_vals[arg] < best_val) {
      best_val = prefix_vals[arg];
      best_set = ElementSet(n);
      for (std::size_t k = 0; k < arg; ++k) best_set.insert(order[k]);
    }
  };
  auto lower_bound = [](const VectorXd& x) { return x.cwiseMin(0.0).sum(); };

  VectorXd x = VectorXd::Zero(static_cast<Eigen::Index>(n));
  VectorXd q;
  greedy_vertex(x, q);
  std::vector<VectorXd> corral{q};
  std::vector<double> lambda{1.0};
  x = q;

  auto affine_min = [&](std::vector<double>& alpha) {
    const Eigen::Index k = static_cast<Eigen::Index>(corral.size());
    MatrixXd kkt = MatrixXd::Zero(k + 1, k + 1);
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b <= a; ++b) {
        kkt(a, b) = kkt(b, a) = corral[static_cast<std::size_t>(a)].dot(corral[static_cast<std::size_t>(b)]);
      }
      kkt(a, k) = kkt(k, a) = 1.0;
    }
    VectorXd rhs = VectorXd::Zero(k + 1);
    rhs[k] = 1.0;
    const VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    alpha.assign(sol.data(), sol.data() + k);
  };
  auto combine = [&](const std::vector<double>& w) {
    VectorXd y = VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < corral.size(); ++i) y += w[i] * corral[i];
    return y;
  };

  constexpr double kWeightEps = 1e-12;
  bool converged = false;
  std::size_t iter = 0;
  for (; iter < cap; ++iter) {
    greedy_vertex(x, q);
    if (best_val - lower_bound(x) <= opt.tol) {
      converged = true;
      break;
    }
    const double wolfe_gap = x.squaredNorm() - x.dot(q);
    if (wolfe_gap <= 1e-15 * std::max(1.0, x.squaredNorm())) break;  // numerically at the norm point
    bool duplicate = false;
    for (const auto& p : corral) duplicate = duplicate || (p - q).squaredNorm() <= 1e-24;
    if (duplicate) break;
    corral.push_back(q);
    lambda.push_back(0.0);

    for (std::size_t minor = 0; minor <= n + 1; ++minor) {
      std::vector<double> alpha;
      affine_min(alpha);
      if (std::all_of(alpha.begin(), alpha.end(), [](double a) { return a > kWeightEps; })) {
        lambda = alpha;
        x = combine(lambda);
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= kWeightEps) theta = std::min(theta, lambda[i] / (lambda[i] - alpha[i]));
      }
      for (std::size_t i = 0; i < alpha.size(); ++i) lambda[i] = theta * alpha[i] + (1.0 - theta) * lambda[i];
      std::vector<VectorXd> kept;
      std::vector<double> kept_lambda;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (lambda[i] > kWeightEps) {
          kept.push_back(corral[i]);
          kept_lambda.push_back(lambda[i]);
        }
      }
      const double total = std::accumulate(kept_lambda.begin(), kept_lambda.end(), 0.0);
      for (double& l : kept_lambda) l /= total;
      corral = std::move(kept);
      lambda = std::move(kept_lambda);
      x = combine(lambda);
    }
  }
  if (!converged) {
    greedy_vertex(x, q);
    converged = best_val - lower_bound(x) <= opt.tol;
  }
  if (!converged && iter >= cap) {
    throw NonConvergence("min-norm-point: no convergence within " + std::to_string(cap) +
                         " iterations (gap " + std::to_string(best_val - lower_bound(x)) + ")");
  }
  r.argmin = best_set;
  r.value = f(best_set);
  r.iterations = iter + 1;
  r.gap = std::max(0.0, best_val - lower_bound(x));
  r.exact = converged;

#ifdef SHMETRIC_CROSS_CHECK
  if (n <= kBruteForceLimit) {
    const MinResult bf = BruteForceMin(f);
    if (r.value > bf.value + 1e-6) {
      throw std::logic_error("min-norm-point cross-check failed: " + std::to_string(r.value) + " vs brute force " +
                             std::to_string(bf.value));
    }
  }
#endif
  return r;
}

// Exact minimization of offset + sum_{j in A} w_j under a cardinality
// constraint. Ties resolve toward smaller element indices.
inline MinResult ModularMin(std::span<const double> weights, double offset, const Constraint& c) {
  const std::size_t n = weights.size();
  c.RequireFeasible(n);
  for (double w : weights) {
    if (!std::isfinite(w)) throw std::invalid_argument("ModularMin: weights must be finite");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
  std::size_t negatives = 0;
  while (negatives < n && weights[order[negatives]] < 0.0) ++negatives;

  std::size_t take = 0;
  switch (c.kind) {
    case Constraint::Kind::kUnconstrained: take = negatives; break;
    case Constraint::Kind::kCardAtLeast: take = std::max(negatives, c.k); break;
    case Constraint::Kind::kCardAtMost: take = std::min(negatives, c.k); break;
    case Constraint::Kind::kCardExact: take = c.k; break;
  }
  MinResult r;
  r.method = "modular";
  r.exact = true;
  r.argmin = ElementSet(n);
  r.value = offset;
  for (std::size_t t = 0; t < take; ++t) {
    r.argmin.insert(order[t]);
    r.value += weights[order[t]];
  }
  r.iterations = 1;
  return r;
}

inline MinResult ModularMin(const std::vector<double>& weights, double offset, const Constraint& c) {
  return ModularMin(std::span<const double>(weights), offset, c);
}

// offset + sum_{j in A} w_j as an oracle.
inline SetFunction ModularFunction(std::vector<double> weights, double offset = 0.0) {
  const std::size_t n = weights.size();
  return SetFunction(n, [w = std::move(weights), offset](const ElementSet& a) {
    double s = offset;
    a.ForEach([&](std::size_t j) { s += w[j]; });
    return s;
  }, "modular");
}

}  // namespace shm
