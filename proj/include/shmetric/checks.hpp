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

// Property checkers for set functions and submodular Hamming distances.
// Failures are reported with concrete witnesses, never thrown.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shmetric/element_set.hpp"
#include "shmetric/polymatroid.hpp"
#include "shmetric/rng.hpp"
#include "shmetric/set_function.hpp"

namespace shm {

struct CheckOptions {
  enum class Mode { kExhaustive, kRandomized };

  Mode mode = Mode::kExhaustive;
  std::size_t trials = 10000;  // randomized mode only
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::size_t exhaustive_limit = 14;  // pairs; triples use triple_limit
  std::size_t triple_limit = 6;
  std::size_t max_witnesses = 32;

  static CheckOptions Exhaustive() { return {}; }
  static CheckOptions Randomized(std::size_t trials, std::uint64_t seed) {
    CheckOptions o;
    o.mode = Mode::kRandomized;
    o.trials = trials;
    o.seed = seed;
    return o;
  }
};

struct MonotoneWitness {
  ElementSet smaller, larger;
  double f_smaller = 0.0, f_larger = 0.0;
};

// f(A1) + f(A2) = lhs < rhs = f(A1 u A2) + f(A1 n A2).
struct SubmodularWitness {
  ElementSet a1, a2;
  double lhs = 0.0, rhs = 0.0;
};

struct PropertyReport {
  CheckOptions::Mode mode = CheckOptions::Mode::kExhaustive;
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  bool normalized = true;
  double empty_value = 0.0;
  bool positive = true;
  std::optional<ElementSet> positive_witness;
  bool monotone = true;
  std::optional<MonotoneWitness> monotone_witness;
  bool submodular = true;
  std::size_t submodular_violations = 0;
  std::vector<SubmodularWitness> submodular_witnesses;  // first few, in search order

  bool AllPass() const { return normalized && positive && monotone && submodular; }
};

namespace detail {

inline ElementSet RandomSet(std::size_t n, Rng& rng) {
  ElementSet s(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (FairCoin(rng)) s.insert(j);
  }
  return s;
}

inline std::vector<double> ValueTable(const SetFunction& f) {
  const std::size_t n = f.n();
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) table[mask] = f(ElementSet::FromMask(n, mask));
  return table;
}

}  // namespace detail

// Checks normalization, positivity, monotonicity and submodularity.
inline PropertyReport CheckPolymatroid(const SetFunction& f, const CheckOptions& opt = {}) {
  const std::size_t n = f.n();
  PropertyReport r;
  r.mode = opt.mode;
  r.seed = opt.seed;
  r.empty_value = f(ElementSet(n));
  r.normalized = std::abs(r.empty_value) <= opt.tol;

  auto record_sub = [&](const ElementSet& a1, const ElementSet& a2, double lhs, double rhs) {
    r.submodular = false;
    ++r.submodular_violations;
    if (r.submodular_witnesses.size() < opt.max_witnesses) r.submodular_witnesses.push_back({a1, a2, lhs, rhs});
  };

  if (opt.mode == CheckOptions::Mode::kExhaustive) {
    if (n > opt.exhaustive_limit) {
      throw std::invalid_argument("exhaustive check limited to n <= " + std::to_string(opt.exhaustive_limit));
    }
    const auto table = detail::ValueTable(f);
    const std::uint64_t count = table.size();
    r.trials = count;
    for (std::uint64_t a = 1; a < count && r.positive; ++a) {
      if (!(table[a] > 0.0)) {
        r.positive = false;
        r.positive_witness = ElementSet::FromMask(n, a);
      }
    }
    for (std::uint64_t a = 0; a < count && r.monotone; ++a) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t b = a | (std::uint64_t{1} << j);
        if (b != a && table[b] < table[a] - opt.tol) {
          r.monotone = false;
          r.monotone_witness = MonotoneWitness{ElementSet::FromMask(n, a), ElementSet::FromMask(n, b), table[a], table[b]};
          break;
        }
      }
    }
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = a + 1; b < count; ++b) {
        if ((a & b) == a || (a & b) == b) continue;
        const double lhs = table[a] + table[b];
        const double rhs = table[a | b] + table[a & b];
        if (lhs < rhs - opt.tol) record_sub(ElementSet::FromMask(n, a), ElementSet::FromMask(n, b), lhs, rhs);
      }
    }
    return r;
  }

  r.trials = opt.trials;
  Rng rng = MakeRng(opt.seed);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const ElementSet a = detail::RandomSet(n, rng);
    const ElementSet b = detail::RandomSet(n, rng);
    const double fa = f(a), fb = f(b);
    if (r.positive && !a.empty() && !(fa > 0.0)) {
      r.positive = false;
      r.positive_witness = a;
    }
    if (r.monotone && n > 0) {
      const std::size_t j = UniformIndex(rng, n);
      ElementSet aj = a;
      aj.insert(j);
      const double faj = f(aj);
      if (faj < fa - opt.tol) {
        r.monotone = false;
        r.monotone_witness = MonotoneWitness{a, aj, fa, faj};
      }
    }
    const double lhs = fa + fb;
    const double rhs = f(a | b) + f(a & b);
    if (lhs < rhs - opt.tol) record_sub(a, b, lhs, rhs);
  }
  return r;
}

inline PropertyReport CheckPolymatroid(const PolymatroidSpec& f, const CheckOptions& opt = {}) {
  return CheckPolymatroid(f.AsFunction(), opt);
}

// g_B(A) = f(A ^ B); generally neither submodular nor supermodular in A.
inline SetFunction ShiftedOracle(const PolymatroidSpec& f, const ElementSet& b) {
  RequireSameSize(f.n(), b.n(), "ShiftedOracle");
  auto spec = std::make_shared<const PolymatroidSpec>(f);
  return SetFunction(f.n(), [spec, b](const ElementSet& a) { return spec->Evaluate(a ^ b); },
                     "shifted_" + std::string(f.KindName()));
}

enum class MetricAxiom { kNonnegative, kIdentity, kSymmetry, kTriangle };

inline const char* MetricAxiomName(MetricAxiom a) {
  switch (a) {
    case MetricAxiom::kNonnegative: return "nonnegativity";
    case MetricAxiom::kIdentity: return "identity";
    case MetricAxiom::kSymmetry: return "symmetry";
    case MetricAxiom::kTriangle: return "triangle";
  }
  return "?";
}

// For the triangle axiom: d(a, b) = lhs > rhs = d(a, c) + d(c, b).
struct MetricViolation {
  MetricAxiom axiom = MetricAxiom::kTriangle;
  ElementSet a, b, c;
  double lhs = 0.0, rhs = 0.0;
};

struct MetricReport {
  CheckOptions::Mode mode = CheckOptions::Mode::kExhaustive;
  std::uint64_t checked = 0;
  std::size_t violations = 0;
  std::vector<MetricViolation> witnesses;

  bool AllPass() const { return violations == 0; }
  bool Holds(MetricAxiom axiom) const {
    for (const auto& w : witnesses) {
      if (w.axiom == axiom) return false;
    }
    return true;
  }
};

// Checks the metric axioms of d(A, B) = f(A ^ B).
inline MetricReport MetricAxiomCheck(const SetFunction& f, const CheckOptions& opt = {}) {
  const std::size_t n = f.n();
  MetricReport r;
  r.mode = opt.mode;
  auto record = [&](MetricAxiom ax, const ElementSet& a, const ElementSet& b, const ElementSet& c, double lhs,
                    double rhs) {
    ++r.violations;
    if (r.witnesses.size() < opt.max_witnesses) r.witnesses.push_back({ax, a, b, c, lhs, rhs});
  };
  auto pair_checks = [&](const ElementSet& a, const ElementSet& b, double dab, double dba) {
    if (dab < -opt.tol) record(MetricAxiom::kNonnegative, a, b, a, dab, 0.0);
    if (a == b ? std::abs(dab) > opt.tol : !(dab > 0.0)) record(MetricAxiom::kIdentity, a, b, a, dab, 0.0);
    if (std::abs(dab - dba) > opt.tol) record(MetricAxiom::kSymmetry, a, b, a, dab, dba);
  };

  if (opt.mode == CheckOptions::Mode::kExhaustive) {
    if (n > opt.triple_limit) {
      throw std::invalid_argument("exhaustive triple check limited to n <= " + std::to_string(opt.triple_limit));
    }
    const auto table = detail::ValueTable(f);
    const std::uint64_t count = table.size();
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        const double dab = table[a ^ b];
        pair_checks(ElementSet::FromMask(n, a), ElementSet::FromMask(n, b), dab, table[b ^ a]);
        for (std::uint64_t c = 0; c < count; ++c) {
          ++r.checked;
          const double rhs = table[a ^ c] + table[c ^ b];
          if (dab > rhs + opt.tol) {
            record(MetricAxiom::kTriangle, ElementSet::FromMask(n, a), ElementSet::FromMask(n, b),
                   ElementSet::FromMask(n, c), dab, rhs);
          }
        }
      }
    }
    return r;
  }

  Rng rng = MakeRng(opt.seed);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const ElementSet a = detail::RandomSet(n, rng);
    const ElementSet b = detail::RandomSet(n, rng);
    const ElementSet c = detail::RandomSet(n, rng);
    const double dab = f(a ^ b);
    pair_checks(a, b, dab, f(b ^ a));
    pair_checks(a, a, f(a ^ a), f(a ^ a));
    const double rhs = f(a ^ c) + f(c ^ b);
    ++r.checked;
    if (dab > rhs + opt.tol) record(MetricAxiom::kTriangle, a, b, c, dab, rhs);
  }
  return r;
}

inline MetricReport MetricAxiomCheck(const PolymatroidSpec& f, const CheckOptions& opt = {}) {
  return MetricAxiomCheck(f.AsFunction(), opt);
}

}  // namespace shm
