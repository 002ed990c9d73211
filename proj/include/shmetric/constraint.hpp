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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shm {

class InfeasibleConstraint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cardinality constraint on the decision set A.
struct Constraint {
  enum class Kind { kUnconstrained, kCardAtLeast, kCardAtMost, kCardExact };

  Kind kind = Kind::kUnconstrained;
  std::size_t k = 0;

  static Constraint Unconstrained() { return {}; }
  static Constraint AtLeast(std::size_t k) { return {Kind::kCardAtLeast, k}; }
  static Constraint AtMost(std::size_t k) { return {Kind::kCardAtMost, k}; }
  static Constraint Exact(std::size_t k) { return {Kind::kCardExact, k}; }

  bool Admits(std::size_t size) const {
    switch (kind) {
      case Kind::kUnconstrained: return true;
      case Kind::kCardAtLeast: return size >= k;
      case Kind::kCardAtMost: return size <= k;
      case Kind::kCardExact: return size == k;
    }
    return false;
  }

  bool FeasibleFor(std::size_t n) const {
    return kind == Kind::kUnconstrained || kind == Kind::kCardAtMost || k <= n;
  }

  void RequireFeasible(std::size_t n) const {
    if (!FeasibleFor(n)) {
      throw InfeasibleConstraint("constraint " + ToString() +
                                 " infeasible on ground set of size " + std::to_string(n));
    }
  }

  std::string ToString() const {
    switch (kind) {
      case Kind::kUnconstrained: return "unconstrained";
      case Kind::kCardAtLeast: return "|A|>=" + std::to_string(k);
      case Kind::kCardAtMost: return "|A|<=" + std::to_string(k);
      case Kind::kCardExact: return "|A|==" + std::to_string(k);
    }
    return "?";
  }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

}  // namespace shm
