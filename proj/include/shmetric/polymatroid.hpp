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

// Positive polymatroid functions (normalized, monotone, submodular, and
// strictly positive on nonempty sets) used as submodular Hamming metrics.
//
// Every constructor validates the parameters it is given so that positivity
// holds by construction:
//   Modular             f(Y) = sum_{j in Y} w_j,                w_j > 0
//   ConcaveCardinality  f(Y) = |Y|^(1/alpha),                   alpha >= 1
//   ClusteredConcave    f(Y) = sum_{W} sqrt(|Y n W|),           classes partition V
//   FacilityLocation    f(Y) = sum_i max_{j in Y} S_ij,         every column has a positive entry
//   SaturatedCoverage   f(Y) = sum_i min(sum_{j in Y} w_ij, c_i), c_i > 0
//   SetCover            f(Y) = |U_{j in Y} cover_j|,            covers nonempty
//   Scaled              f(Y) = factor * g(Y),                   factor > 0
//   Sum                 f(Y) = sum_t g_t(Y)

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "shmetric/element_set.hpp"
#include "shmetric/set_function.hpp"

namespace shm {

class InvalidFunction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PolymatroidSpec;
using SpecPtr = std::shared_ptr<const PolymatroidSpec>;

struct ModularParams {
  std::vector<double> weights;
};
struct ConcaveCardinalityParams {
  std::size_t n = 0;
  double alpha = 1.0;
};
struct ClusteredConcaveParams {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;  // derived
};
struct FacilityLocationParams {
  std::size_t n = 0;
  std::vector<double> similarity;  // row-major n x n
  double at(std::size_t i, std::size_t j) const { return similarity[i * n + j]; }
};
struct SaturatedCoverageParams {
  std::size_t n = 0;
  std::size_t rows = 0;
  std::vector<double> weights;  // row-major rows x n
  std::vector<double> caps;     // one per row
  double at(std::size_t i, std::size_t j) const { return weights[i * n + j]; }
};
struct SetCoverParams {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> covers;  // one per element of V
};
struct ScaledParams {
  double factor = 1.0;
  SpecPtr inner;
};
struct SumParams {
  std::vector<SpecPtr> terms;
};

class PolymatroidSpec {
 public:
  enum class Kind {
    kModular,
    kConcaveCardinality,
    kClusteredConcave,
    kFacilityLocation,
    kSaturatedCoverage,
    kSetCover,
    kScaled,
    kSum,
  };
  using Params = std::variant<ModularParams, ConcaveCardinalityParams, ClusteredConcaveParams,
                              FacilityLocationParams, SaturatedCoverageParams, SetCoverParams,
                              ScaledParams, SumParams>;

  static PolymatroidSpec Modular(std::vector<double> weights) {
    for (double w : weights) {
      if (!std::isfinite(w) || w <= 0.0) throw InvalidFunction("modular weights must be finite and > 0");
    }
    return UncheckedModular(std::move(weights));
  }

  // Skips validation; for exercising property checkers on non-polymatroids.
  static PolymatroidSpec UncheckedModular(std::vector<double> weights) {
    const std::size_t n = weights.size();
    return PolymatroidSpec(n, ModularParams{std::move(weights)});
  }

  static PolymatroidSpec ConcaveCardinality(std::size_t n, double alpha) {
    if (!std::isfinite(alpha) || alpha < 1.0) throw InvalidFunction("alpha must be >= 1");
    return PolymatroidSpec(n, ConcaveCardinalityParams{n, alpha});
  }

  static PolymatroidSpec ClusteredConcave(std::size_t n, std::vector<std::vector<std::size_t>> classes) {
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> class_of(n, kUnset);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t j : classes[c]) {
        if (j >= n) throw InvalidFunction("word class member out of range");
        if (class_of[j] != kUnset) throw InvalidFunction("word classes must be disjoint");
        class_of[j] = c;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (class_of[j] == kUnset) {
        throw InvalidFunction("element " + std::to_string(j) + " belongs to no word class");
      }
    }
    return PolymatroidSpec(n, ClusteredConcaveParams{n, std::move(classes), std::move(class_of)});
  }

  static PolymatroidSpec FacilityLocation(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
      if (r.size() != n) throw InvalidFunction("similarity matrix must be square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return FacilityLocation(n, std::move(flat));
  }

  static PolymatroidSpec FacilityLocation(std::size_t n, std::vector<double> similarity) {
    if (similarity.size() != n * n) throw InvalidFunction("similarity matrix must be n x n");
    for (double s : similarity) {
      if (!std::isfinite(s) || s < 0.0) throw InvalidFunction("similarities must be finite and >= 0");
    }
    FacilityLocationParams p{n, std::move(similarity)};
    for (std::size_t j = 0; j < n; ++j) {
      double col_max = 0.0;
      for (std::size_t i = 0; i < n; ++i) col_max = std::max(col_max, p.at(i, j));
      if (col_max <= 0.0) throw InvalidFunction("similarity column " + std::to_string(j) + " has no positive entry");
    }
    return PolymatroidSpec(n, std::move(p));
  }

  static PolymatroidSpec SaturatedCoverage(const std::vector<std::vector<double>>& weights,
                                           std::vector<double> caps) {
    const std::size_t rows = weights.size();
    if (rows == 0) throw InvalidFunction("saturated coverage needs at least one row");
    const std::size_t n = weights.front().size();
    std::vector<double> flat;
    flat.reserve(rows * n);
    for (const auto& r : weights) {
      if (r.size() != n) throw InvalidFunction("saturated coverage rows must have equal length");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    if (caps.size() != rows) throw InvalidFunction("one cap per row required");
    for (double w : flat) {
      if (!std::isfinite(w) || w < 0.0) throw InvalidFunction("coverage weights must be finite and >= 0");
    }
    for (double c : caps) {
      if (!std::isfinite(c) || c <= 0.0) throw InvalidFunction("caps must be finite and > 0");
    }
    SaturatedCoverageParams p{n, rows, std::move(flat), std::move(caps)};
    for (std::size_t j = 0; j < n; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < rows && !any; ++i) any = p.at(i, j) > 0.0;
      if (!any) throw InvalidFunction("coverage column " + std::to_string(j) + " has no positive weight");
    }
    return PolymatroidSpec(n, std::move(p));
  }

  // Repeated members within a cover are collapsed.
  static PolymatroidSpec SetCover(std::size_t universe, std::vector<std::vector<std::size_t>> covers) {
    for (auto& c : covers) {
      if (c.empty()) throw InvalidFunction("every cover set must be nonempty");
      for (std::size_t u : c) {
        if (u >= universe) throw InvalidFunction("cover member outside universe");
      }
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    const std::size_t n = covers.size();
    return PolymatroidSpec(n, SetCoverParams{universe, std::move(covers)});
  }

  static PolymatroidSpec Scaled(PolymatroidSpec inner, double factor) {
    if (!std::isfinite(factor) || factor <= 0.0) throw InvalidFunction("scale factor must be > 0");
    const std::size_t n = inner.n();
    return PolymatroidSpec(n, ScaledParams{factor, std::make_shared<const PolymatroidSpec>(std::move(inner))});
  }

  static PolymatroidSpec Sum(std::vector<PolymatroidSpec> terms) {
    if (terms.empty()) throw InvalidFunction("sum needs at least one term");
    const std::size_t n = terms.front().n();
    SumParams p;
    for (auto& t : terms) {
      if (t.n() != n) throw InvalidFunction("sum terms must share the ground set");
      p.terms.push_back(std::make_shared<const PolymatroidSpec>(std::move(t)));
    }
    return PolymatroidSpec(n, std::move(p));
  }

  std::size_t n() const { return n_; }
  Kind kind() const { return static_cast<Kind>(params_.index()); }
  const Params& params() const { return params_; }

  std::string_view KindName() const {
    static constexpr std::string_view kNames[] = {
        "modular", "concave_cardinality", "clustered_concave", "facility_location",
        "saturated_coverage", "set_cover", "scaled", "sum"};
    return kNames[params_.index()];
  }

  double Evaluate(const ElementSet& y) const {
    RequireSameSize(n_, y.n(), "Evaluate");
    return std::visit([&](const auto& p) { return Eval(p, y); }, params_);
  }

  // f(j | X) = f(X + j) - f(X).
  double Gain(std::size_t j, const ElementSet& x) const {
    RequireSameSize(n_, x.n(), "Gain");
    if (x.contains(j)) return 0.0;
    ElementSet xj = x;
    xj.insert(j);
    return Evaluate(xj) - Evaluate(x);
  }

  // Per-element marginals relative to X: out[j] = f(X) - f(X - j) for
  // j in X and f(X + j) - f(X) otherwise. One pass; used to build modular
  // bounds without 2n full evaluations.
  std::vector<double> Marginals(const ElementSet& x) const {
    RequireSameSize(n_, x.n(), "Marginals");
    return std::visit([&](const auto& p) { return Marg(p, x); }, params_);
  }

  SetFunction AsFunction() const {
    auto self = std::make_shared<const PolymatroidSpec>(*this);
    return SetFunction(n_, [self](const ElementSet& y) { return self->Evaluate(y); },
                       std::string(KindName()));
  }

  friend bool operator==(const PolymatroidSpec& a, const PolymatroidSpec& b);

 private:
  PolymatroidSpec(std::size_t n, Params p) : n_(n), params_(std::move(p)) {}

  static double Eval(const ModularParams& p, const ElementSet& y) {
    double s = 0.0;
    y.ForEach([&](std::size_t j) { s += p.weights[j]; });
    return s;
  }
  static double Eval(const ConcaveCardinalityParams& p, const ElementSet& y) {
    return std::pow(static_cast<double>(y.size()), 1.0 / p.alpha);
  }
  static double Eval(const ClusteredConcaveParams& p, const ElementSet& y) {
    std::vector<std::size_t> counts(p.classes.size(), 0);
    y.ForEach([&](std::size_t j) { ++counts[p.class_of[j]]; });
    double s = 0.0;
    for (std::size_t c : counts) s += std::sqrt(static_cast<double>(c));
    return s;
  }
  static double Eval(const FacilityLocationParams& p, const ElementSet& y) {
    const auto members = y.Indices();
    if (members.empty()) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < p.n; ++i) {
      double best = 0.0;
      for (std::size_t j : members) best = std::max(best, p.at(i, j));
      s += best;
    }
    return s;
  }
  static double Eval(const SaturatedCoverageParams& p, const ElementSet& y) {
    const auto members = y.Indices();
    double s = 0.0;
    for (std::size_t i = 0; i < p.rows; ++i) {
      double row = 0.0;
      for (std::size_t j : members) row += p.at(i, j);
      s += std::min(row, p.caps[i]);
    }
    return s;
  }
  static double Eval(const SetCoverParams& p, const ElementSet& y) {
    ElementSet covered(p.universe);
    y.ForEach([&](std::size_t j) {
      for (std::size_t u : p.covers[j]) covered.insert(u);
    });
    return static_cast<double>(covered.size());
  }
  static double Eval(const ScaledParams& p, const ElementSet& y) { return p.factor * p.inner->Evaluate(y); }
  static double Eval(const SumParams& p, const ElementSet& y) {
    double s = 0.0;
    for (const auto& t : p.terms) s += t->Evaluate(y);
    return s;
  }

  static std::vector<double> Marg(const ModularParams& p, const ElementSet&) { return p.weights; }

  static std::vector<double> Marg(const ConcaveCardinalityParams& p, const ElementSet& x) {
    const double c = static_cast<double>(x.size());
    const double e = 1.0 / p.alpha;
    const double drop = c >= 1.0 ? std::pow(c, e) - std::pow(c - 1.0, e) : 0.0;
    const double add = std::pow(c + 1.0, e) - std::pow(c, e);
    std::vector<double> out(p.n, add);
    x.ForEach([&](std::size_t j) { out[j] = drop; });
    return out;
  }

  static std::vector<double> Marg(const ClusteredConcaveParams& p, const ElementSet& x) {
    std::vector<std::size_t> counts(p.classes.size(), 0);
    x.ForEach([&](std::size_t j) { ++counts[p.class_of[j]]; });
    std::vector<double> out(p.n);
    for (std::size_t j = 0; j < p.n; ++j) {
      const double c = static_cast<double>(counts[p.class_of[j]]);
      out[j] = x.contains(j) ? std::sqrt(c) - std::sqrt(c - 1.0) : std::sqrt(c + 1.0) - std::sqrt(c);
    }
    return out;
  }

  static std::vector<double> Marg(const FacilityLocationParams& p, const ElementSet& x) {
    const auto members = x.Indices();
    std::vector<double> out(p.n, 0.0);
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < p.n; ++i) {
      double top1 = 0.0, top2 = 0.0;
      std::size_t arg1 = kNone;
      for (std::size_t j : members) {
        const double s = p.at(i, j);
        if (arg1 == kNone || s > top1) {
          top2 = arg1 == kNone ? 0.0 : top1;
          top1 = s;
          arg1 = j;
        } else if (s > top2) {
          top2 = s;
        }
      }
      for (std::size_t j = 0; j < p.n; ++j) {
        if (x.contains(j)) {
          if (j == arg1) out[j] += top1 - top2;
        } else {
          out[j] += std::max(0.0, p.at(i, j) - top1);
        }
      }
    }
    return out;
  }

  static std::vector<double> Marg(const SaturatedCoverageParams& p, const ElementSet& x) {
    const auto members = x.Indices();
    std::vector<double> out(p.n, 0.0);
    for (std::size_t i = 0; i < p.rows; ++i) {
      double row = 0.0;
      for (std::size_t j : members) row += p.at(i, j);
      const double base = std::min(row, p.caps[i]);
      for (std::size_t j = 0; j < p.n; ++j) {
        if (x.contains(j)) {
          out[j] += base - std::min(row - p.at(i, j), p.caps[i]);
        } else {
          out[j] += std::min(row + p.at(i, j), p.caps[i]) - base;
        }
      }
    }
    return out;
  }

  static std::vector<double> Marg(const SetCoverParams& p, const ElementSet& x) {
    std::vector<std::size_t> cnt(p.universe, 0);
    x.ForEach([&](std::size_t j) {
      for (std::size_t u : p.covers[j]) ++cnt[u];
    });
    std::vector<double> out(p.covers.size(), 0.0);
    for (std::size_t j = 0; j < p.covers.size(); ++j) {
      const std::size_t target = x.contains(j) ? 1 : 0;
      std::size_t c = 0;
      for (std::size_t u : p.covers[j]) c += cnt[u] == target ? 1 : 0;
      out[j] = static_cast<double>(c);
    }
    return out;
  }

  static std::vector<double> Marg(const ScaledParams& p, const ElementSet& x) {
    auto out = p.inner->Marginals(x);
    for (double& v : out) v *= p.factor;
    return out;
  }

  static std::vector<double> Marg(const SumParams& p, const ElementSet& x) {
    std::vector<double> out(x.n(), 0.0);
    for (const auto& t : p.terms) {
      const auto m = t->Marginals(x);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += m[j];
    }
    return out;
  }

  std::size_t n_ = 0;
  Params params_;
};

namespace detail {

inline bool ParamsEqual(const ModularParams& a, const ModularParams& b) { return a.weights == b.weights; }
inline bool ParamsEqual(const ConcaveCardinalityParams& a, const ConcaveCardinalityParams& b) {
  return a.n == b.n && a.alpha == b.alpha;
}
inline bool ParamsEqual(const ClusteredConcaveParams& a, const ClusteredConcaveParams& b) {
  return a.n == b.n && a.class_of == b.class_of;
}
inline bool ParamsEqual(const FacilityLocationParams& a, const FacilityLocationParams& b) {
  return a.n == b.n && a.similarity == b.similarity;
}
inline bool ParamsEqual(const SaturatedCoverageParams& a, const SaturatedCoverageParams& b) {
  return a.n == b.n && a.rows == b.rows && a.weights == b.weights && a.caps == b.caps;
}
inline bool ParamsEqual(const SetCoverParams& a, const SetCoverParams& b) {
  return a.universe == b.universe && a.covers == b.covers;
}
inline bool ParamsEqual(const ScaledParams& a, const ScaledParams& b) {
  return a.factor == b.factor && *a.inner == *b.inner;
}
inline bool ParamsEqual(const SumParams& a, const SumParams& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t t = 0; t < a.terms.size(); ++t) {
    if (!(*a.terms[t] == *b.terms[t])) return false;
  }
  return true;
}

}  // namespace detail

inline bool operator==(const PolymatroidSpec& a, const PolymatroidSpec& b) {
  if (a.n_ != b.n_ || a.params_.index() != b.params_.index()) return false;
  return std::visit(
      [&](const auto& pa) {
        using T = std::decay_t<decltype(pa)>;
        return detail::ParamsEqual(pa, std::get<T>(b.params_));
      },
      a.params_);
}

// d_f(A, B) = f(A ^ B).
inline double MetricDistance(const PolymatroidSpec& f, const ElementSet& a, const ElementSet& b) {
  return f.Evaluate(SymDiff(a, b));
}

// Curvature summary: kappa = 1 - min_j f(j | V - j) / f(j).
struct CurvatureReport {
  double kappa_total = 0.0;
  std::vector<double> gain_ratios;  // f(j | V - j) / f(j), per element
};

inline double ClampUnit(double v) { return std::clamp(v, 0.0, 1.0); }

inline CurvatureReport Curvature(const PolymatroidSpec& f) {
  const std::size_t n = f.n();
  const ElementSet empty(n);
  const auto singles = f.Marginals(empty);
  const auto tails = f.Marginals(ElementSet::Full(n));
  CurvatureReport r;
  r.gain_ratios.resize(n);
  double min_ratio = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(singles[j] > 0.0)) {
      throw InvalidFunction("curvature undefined: f({" + std::to_string(j) + "}) is not positive");
    }
    r.gain_ratios[j] = tails[j] / singles[j];
    min_ratio = std::min(min_ratio, r.gain_ratios[j]);
  }
  r.kappa_total = n == 0 ? 0.0 : ClampUnit(1.0 - min_ratio);
  return r;
}

// Curvature restricted to Y: 1 - min_{j in Y} f(j | Y - j) / f(j). Zero for
// empty Y.
inline double RestrictedCurvature(const PolymatroidSpec& f, const ElementSet& y) {
  if (y.empty()) return 0.0;
  const auto singles = f.Marginals(ElementSet(f.n()));
  const auto drops = f.Marginals(y);
  double min_ratio = 1.0;
  y.ForEach([&](std::size_t j) {
    if (!(singles[j] > 0.0)) {
      throw InvalidFunction("curvature undefined: f({" + std::to_string(j) + "}) is not positive");
    }
    min_ratio = std::min(min_ratio, drops[j] / singles[j]);
  });
  return ClampUnit(1.0 - min_ratio);
}

}  // namespace shm
