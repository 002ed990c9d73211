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

// Solvers for SH-min and SH-max, F(A) = sum_i f_i(A ^ B_i), and their
// certification against exhaustive search.
//
//   UnionSplitMin   minimize the split surrogate F' exactly       F <= 2 OPT
//   BestB           best of B_1..B_m (homogeneous)                F <= (2 - 2/m) OPT
//   MajorMin        modular-upper-bound descent                   curvature bound
//   UnionSplitMax   maximize F' by double / randomized greedy      1/6 (1/4), 1/(2e)
//   RandSetMax      best of uniformly random subsets               1/8 in expectation

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shmetric/constraint.hpp"
#include "shmetric/element_set.hpp"
#include "shmetric/instance.hpp"
#include "shmetric/maxsolve.hpp"
#include "shmetric/minsolve.hpp"
#include "shmetric/polymatroid.hpp"
#include "shmetric/rng.hpp"

namespace shm {

class UnsupportedConstraint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Direction { kMin, kMax };

// Approximation guarantee a solver claims for the instance it ran on.
struct Guarantee {
  double factor = 1.0;  // >= 1 for minimization, <= 1 for maximization
  std::string label;
  bool in_expectation = false;  // compare the empirical mean, not the best draw
};

struct Solution {
  ElementSet set;
  double value = 0.0;  // true F, never a surrogate value
  std::string solver;
  std::size_t iterations = 0;
  std::optional<std::uint64_t> seed;
  std::vector<double> trace;              // F after each accepted step
  std::optional<double> surrogate_value;  // F'(set) where a surrogate was optimized
  std::optional<double> empirical_mean;   // mean F over random draws
  std::optional<Guarantee> guarantee;
};

namespace detail {

inline void RequireUnconstrained(const ShInstance& inst, const char* solver) {
  if (inst.constraint().kind != Constraint::Kind::kUnconstrained) {
    throw UnsupportedConstraint(std::string(solver) + " supports only unconstrained instances, got " +
                                inst.constraint().ToString());
  }
}

}  // namespace detail

inline Solution UnionSplitMin(const ShInstance& inst, const MinNormOptions& opt = {}) {
  detail::RequireUnconstrained(inst, "union-split");
  const MinResult r = SubmodularMinUnconstrained(UnionSplitSurrogate(inst), opt);
  Solution s;
  s.solver = "union-split";
  s.set = r.argmin;
  s.value = ShObjective(inst, r.argmin);
  s.surrogate_value = r.value;
  s.iterations = r.iterations;
  s.guarantee = Guarantee{2.0, "2", false};
  return s;
}

inline Solution BestB(const ShInstance& inst) {
  detail::RequireUnconstrained(inst, "best-b");
  Solution s;
  s.solver = "best-b";
  s.set = inst.b(0);
  s.value = ShObjective(inst, s.set);
  for (std::size_t i = 1; i < inst.m(); ++i) {
    const double v = ShObjective(inst, inst.b(i));
    if (v < s.value) {
      s.value = v;
      s.set = inst.b(i);
    }
  }
  s.iterations = inst.m();
  const double m = static_cast<double>(inst.m());
  if (inst.m() == 1) {
    s.guarantee = Guarantee{1.0, "exact (m=1)", false};
  } else if (inst.homogeneous()) {
    s.guarantee = Guarantee{2.0 - 2.0 / m, "2-2/m", false};
  }
  return s;
}

enum class BoundMode { kGrow, kShrink };

// Modular upper bound offset + sum_{j in A} w_j on F, tight at the anchor.
struct ModularBound {
  double offset = 0.0;
  std::vector<double> weights;
  ElementSet anchor;
  BoundMode mode = BoundMode::kGrow;

  double Evaluate(const ElementSet& a) const {
    double s = offset;
    a.ForEach([&](std::size_t j) { s += weights[j]; });
    return s;
  }
};

namespace detail {

// Adds sum_i m_i(A ^ B_i) for the per-term modular function
// m_i(Y) = base + sum_{j in Y} c_j into (offset, weights) over A, using
// sum_{j in A^B} c_j = sum_{j in B} c_j + sum_{j in A} (-1)^[j in B] c_j.
inline void AccumulateShifted(const ElementSet& b, double base, const std::vector<double>& c, double& offset,
                              std::vector<double>& weights) {
  offset += base;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (b.contains(j)) {
      offset += c[j];
      weights[j] -= c[j];
    } else {
      weights[j] += c[j];
    }
  }
}

}  // namespace detail

// Superdifferential bound of F at anchor A_t. With Y_i = A_t ^ B_i each term
// is bounded by
//   grow:   f(Y_i) - sum_{Y_i - Y} f(j | V - j)   + sum_{Y - Y_i} f(j | Y_i)
//   shrink: f(Y_i) - sum_{Y_i - Y} f(j | Y_i - j) + sum_{Y - Y_i} f(j)
// and then rewritten as a modular function of A.
inline ModularBound BuildModularBound(const ShInstance& inst, const ElementSet& anchor, BoundMode mode) {
  RequireSameSize(inst.n(), anchor.n(), "BuildModularBound");
  const std::size_t n = inst.n();
  ModularBound bound;
  bound.anchor = anchor;
  bound.mode = mode;
  bound.weights.assign(n, 0.0);
  const ElementSet full = ElementSet::Full(n);
  const ElementSet empty(n);
  std::vector<double> c(n);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const PolymatroidSpec& f = inst.function(i);
    const ElementSet y = anchor ^ inst.b(i);
    const auto at_y = f.Marginals(y);
    const auto other = f.Marginals(mode == BoundMode::kGrow ? full : empty);
    double base = f.Evaluate(y);
    for (std::size_t j = 0; j < n; ++j) {
      const bool in_y = y.contains(j);
      if (mode == BoundMode::kGrow) {
        c[j] = in_y ? other[j] : at_y[j];
      } else {
        c[j] = in_y ? at_y[j] : other[j];
      }
      if (in_y) base -= c[j];
    }
    detail::AccumulateShifted(inst.b(i), base, c, bound.offset, bound.weights);
  }
  return bound;
}

// Modular bound sum_i sum_{j in A ^ B_i} f_i(j): valid everywhere, tight at
// no particular A in general.
inline ModularBound SingletonBound(const ShInstance& inst) {
  const std::size_t n = inst.n();
  ModularBound bound;
  bound.anchor = ElementSet(n);
  bound.mode = BoundMode::kShrink;
  bound.weights.assign(n, 0.0);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const auto singles = inst.function(i).Marginals(ElementSet(n));
    detail::AccumulateShifted(inst.b(i), 0.0, singles, bound.offset, bound.weights);
  }
  return bound;
}

// max_i |Y_i| / (1 + (|Y_i| - 1)(1 - kappa_i(Y_i))), Y_i = A* ^ B_i.
inline double MajorMinCurvatureBound(const ShInstance& inst, const ElementSet& a_star) {
  double worst = 1.0;
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const ElementSet y = a_star ^ inst.b(i);
    const double size = static_cast<double>(y.size());
    if (size <= 1.0) continue;
    const double kappa = RestrictedCurvature(inst.function(i), y);
    worst = std::max(worst, size / (1.0 + (size - 1.0) * (1.0 - kappa)));
  }
  return worst;
}

struct MajorMinOptions {
  enum class Policy { kBoth, kGrow, kShrink };
  Policy policy = Policy::kBoth;
  double tol = 1e-9;
  std::size_t max_iterations = 100;
  std::optional<ElementSet> warm_start;  // extra admissible starting candidate
};

// Majorization-minimization: repeatedly minimize a modular upper bound of F
// tight at the current set under the instance constraint. F never increases.
inline Solution MajorMin(const ShInstance& inst, const MajorMinOptions& opt = {}) {
  const std::size_t n = inst.n();
  const Constraint& cons = inst.constraint();
  cons.RequireFeasible(n);
  auto minimize = [&](const ModularBound& b) { return ModularMin(b.weights, b.offset, cons).argmin; };

  Solution s;
  s.solver = "major-min";
  ElementSet start(n);
  if (!cons.Admits(0)) start = minimize(BuildModularBound(inst, ElementSet(n), BoundMode::kGrow));
  double f_start = ShObjective(inst, start);
  // The minimizer of the singleton bound carries the curvature guarantee.
  const ElementSet alt = minimize(SingletonBound(inst));
  const double f_alt = ShObjective(inst, alt);
  if (f_alt < f_start) {
    start = alt;
    f_start = f_alt;
  }
  if (opt.warm_start && cons.Admits(opt.warm_start->size())) {
    const double f_warm = ShObjective(inst, *opt.warm_start);
    if (f_warm < f_start) {
      start = *opt.warm_start;
      f_start = f_warm;
    }
  }
  s.set = start;
  s.value = f_start;
  s.trace.push_back(f_start);

  for (std::size_t it = 0; it < opt.max_iterations; ++it) {
    ++s.iterations;
    std::optional<ElementSet> best;
    double best_val = std::numeric_limits<double>::infinity();
    auto consider = [&](BoundMode mode) {
      ElementSet cand = minimize(BuildModularBound(inst, s.set, mode));
      const double v = ShObjective(inst, cand);
      if (v < best_val) {
        best_val = v;
        best = std::move(cand);
      }
    };
    if (opt.policy != MajorMinOptions::Policy::kShrink) consider(BoundMode::kGrow);
    if (opt.policy != MajorMinOptions::Policy::kGrow) consider(BoundMode::kShrink);
    if (!(best_val < s.value - opt.tol)) break;
    s.set = *best;
    s.value = best_val;
    s.trace.push_back(best_val);
  }
  s.guarantee = Guarantee{MajorMinCurvatureBound(inst, s.set), "curvature", false};
  return s;
}

struct UnionSplitMaxOptions {
  std::optional<std::uint64_t> seed;  // randomizes the double greedy; default seed 0 for cardinality
  std::size_t draws = 1;              // independent randomized runs; best one is returned
};

inline Solution UnionSplitMax(const ShInstance& inst, const UnionSplitMaxOptions& opt = {}) {
  const Constraint& cons = inst.constraint();
  const SetFunction split = UnionSplitSurrogate(inst);
  Solution s;
  s.solver = "union-split-max";
  s.seed = opt.seed;
  const std::size_t draws = std::max<std::size_t>(1, opt.draws);
  double sum = 0.0;
  bool have = false;
  auto take = [&](const MaxResult& r) {
    const double v = ShObjective(inst, r.argmax);
    sum += v;
    if (!have || v > s.value) {
      s.set = r.argmax;
      s.value = v;
      s.surrogate_value = r.value;
      have = true;
    }
  };
  if (cons.kind == Constraint::Kind::kUnconstrained) {
    if (!opt.seed) {
      take(BidirectionalGreedy(split));
      s.guarantee = Guarantee{1.0 / 6.0, "1/6", false};
      s.iterations = 1;
      return s;
    }
    for (std::size_t d = 0; d < draws; ++d) take(BidirectionalGreedy(split, DeriveSeed(*opt.seed, d)));
    s.guarantee = Guarantee{0.25, "1/4", true};
  } else if (cons.kind == Constraint::Kind::kCardAtMost) {
    const std::uint64_t root = opt.seed.value_or(0);
    const std::size_t k = std::min(cons.k, inst.n());
    for (std::size_t d = 0; d < draws; ++d) take(RandomizedGreedyCard(split, k, DeriveSeed(root, d)));
    s.seed = root;
    s.guarantee = Guarantee{1.0 / (2.0 * std::numbers::e), "1/(2e)", true};
  } else {
    throw UnsupportedConstraint("union-split-max supports unconstrained or |A|<=k, got " + cons.ToString());
  }
  s.iterations = draws;
  s.empirical_mean = sum / static_cast<double>(draws);
  return s;
}

// Best of `draws` uniformly random subsets. When draws >= 2^n every subset is
// enumerated instead, so the mean is the exact expectation.
inline Solution RandSetMax(const ShInstance& inst, std::uint64_t seed, std::size_t draws) {
  detail::RequireUnconstrained(inst, "rand-set");
  const std::size_t n = inst.n();
  Solution s;
  s.solver = "rand-set";
  s.seed = seed;
  s.guarantee = Guarantee{1.0 / 8.0, "1/8", true};
  draws = std::max<std::size_t>(1, draws);
  double sum = 0.0;
  bool have = false;
  auto take = [&](const ElementSet& a) {
    const double v = ShObjective(inst, a);
    sum += v;
    if (!have || v > s.value) {
      s.set = a;
      s.value = v;
      have = true;
    }
  };
  std::size_t used = draws;
  if (n < 63 && draws >= (std::uint64_t{1} << n)) {
    used = std::size_t{1} << n;
    for (std::uint64_t mask = 0; mask < used; ++mask) take(ElementSet::FromMask(n, mask));
  } else {
    for (std::size_t d = 0; d < draws; ++d) take(RandomSubset(n, DeriveSeed(seed, d)));
  }
  s.iterations = used;
  s.empirical_mean = sum / static_cast<double>(used);
  return s;
}

inline Solution BruteForceSolve(const ShInstance& inst, Direction dir) {
  const SetFunction f = ObjectiveFunction(inst);
  Solution s;
  s.solver = "brute";
  s.guarantee = Guarantee{1.0, "exact", false};
  if (dir == Direction::kMin) {
    const MinResult r = BruteForceMin(f, inst.constraint());
    s.set = r.argmin;
    s.iterations = r.iterations;
  } else {
    const MaxResult r = BruteForceMax(f, inst.constraint());
    s.set = r.argmax;
  }
  s.value = ShObjective(inst, s.set);
  return s;
}

struct Certificate {
  Direction direction = Direction::kMin;
  double optimum = 0.0;
  ElementSet optimum_set;
  double compared_value = 0.0;  // solution value, or empirical mean for in-expectation bounds
  double ratio = 1.0;           // compared_value / optimum
  std::optional<double> bound;
  std::string bound_label;
  bool certified = false;  // a guarantee was available to compare against
  bool pass = true;
};

inline constexpr double kCertifyTol = 1e-6;

// Compares a solution against the exhaustive optimum. Major-Min's curvature
// bound is re-evaluated at the true optimum.
inline Certificate Certify(const ShInstance& inst, const Solution& sol, Direction dir) {
  const Solution opt = BruteForceSolve(inst, dir);
  Certificate c;
  c.direction = dir;
  c.optimum = opt.value;
  c.optimum_set = opt.set;
  const bool expectation = sol.guarantee && sol.guarantee->in_expectation && sol.empirical_mean;
  c.compared_value = expectation ? *sol.empirical_mean : sol.value;
  if (std::abs(c.optimum) <= 1e-12) {
    c.ratio = std::abs(c.compared_value) <= 1e-9 ? 1.0 : std::numeric_limits<double>::infinity();
  } else {
    c.ratio = c.compared_value / c.optimum;
  }
  if (!sol.guarantee) return c;
  c.certified = true;
  c.bound_label = sol.guarantee->label;
  c.bound = sol.solver == "major-min" ? MajorMinCurvatureBound(inst, opt.set) : sol.guarantee->factor;
  c.pass = dir == Direction::kMin ? c.ratio <= *c.bound + kCertifyTol : c.ratio >= *c.bound - kCertifyTol;
  return c;
}

}  // namespace shm
