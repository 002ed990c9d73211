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

// Submodular Hamming optimization instances: F(A) = sum_i f_i(A ^ B_i).

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shmetric/constraint.hpp"
#include "shmetric/element_set.hpp"
#include "shmetric/polymatroid.hpp"
#include "shmetric/set_function.hpp"

namespace shm {

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShInstance {
 public:
  ShInstance(std::vector<PolymatroidSpec> functions, std::vector<ElementSet> b_sets,
             Constraint constraint = Constraint::Unconstrained())
      : functions_(std::move(functions)), b_sets_(std::move(b_sets)), constraint_(constraint) {
    if (functions_.empty()) throw InvalidInstance("instance needs m >= 1 terms");
    if (functions_.size() != b_sets_.size()) {
      throw InvalidInstance("one B set per function required (" + std::to_string(functions_.size()) + " vs " +
                            std::to_string(b_sets_.size()) + ")");
    }
    n_ = functions_.front().n();
    for (const auto& f : functions_) {
      if (f.n() != n_) throw InvalidInstance("all functions must share the ground set");
    }
    for (const auto& b : b_sets_) {
      if (b.n() != n_) throw InvalidInstance("B set on the wrong ground set");
    }
    homogeneous_ = true;
    for (std::size_t i = 1; i < functions_.size() && homogeneous_; ++i) {
      homogeneous_ = functions_[i] == functions_.front();
    }
  }

  // Homogeneous instance: the same f paired with every B_i.
  static ShInstance Homogeneous(const PolymatroidSpec& f, std::vector<ElementSet> b_sets,
                                Constraint constraint = Constraint::Unconstrained()) {
    std::vector<PolymatroidSpec> fs(b_sets.size(), f);
    return ShInstance(std::move(fs), std::move(b_sets), constraint);
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return functions_.size(); }
  const std::vector<PolymatroidSpec>& functions() const { return functions_; }
  const std::vector<ElementSet>& b_sets() const { return b_sets_; }
  const PolymatroidSpec& function(std::size_t i) const { return functions_[i]; }
  const ElementSet& b(std::size_t i) const { return b_sets_[i]; }
  const Constraint& constraint() const { return constraint_; }
  bool homogeneous() const { return homogeneous_; }

  ShInstance WithConstraint(Constraint c) const {
    ShInstance copy = *this;
    copy.constraint_ = c;
    return copy;
  }

 private:
  std::size_t n_ = 0;
  std::vector<PolymatroidSpec> functions_;
  std::vector<ElementSet> b_sets_;
  Constraint constraint_;
  bool homogeneous_ = false;
};

inline double ShObjective(const ShInstance& inst, const ElementSet& a) {
  RequireSameSize(inst.n(), a.n(), "ShObjective");
  double s = 0.0;
  for (std::size_t i = 0; i < inst.m(); ++i) s += inst.function(i).Evaluate(a ^ inst.b(i));
  return s;
}

inline SetFunction ObjectiveFunction(const ShInstance& inst) {
  auto p = std::make_shared<const ShInstance>(inst);
  return SetFunction(inst.n(), [p](const ElementSet& a) { return ShObjective(*p, a); }, "F");
}

// F'(A) = sum_i [f_i(A - B_i) + f_i(B_i - A)], submodular in A and
// F(A) <= F'(A) <= 2 F(A).
inline double UnionSplitValue(const ShInstance& inst, const ElementSet& a) {
  RequireSameSize(inst.n(), a.n(), "UnionSplitValue");
  double s = 0.0;
  for (std::size_t i = 0; i < inst.m(); ++i) {
    s += inst.function(i).Evaluate(a - inst.b(i)) + inst.function(i).Evaluate(inst.b(i) - a);
  }
  return s;
}

inline SetFunction UnionSplitSurrogate(const ShInstance& inst) {
  auto p = std::make_shared<const ShInstance>(inst);
  return SetFunction(inst.n(), [p](const ElementSet& a) { return UnionSplitValue(*p, a); }, "F_split");
}

}  // namespace shm
