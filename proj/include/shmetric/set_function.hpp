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
#include <functional>
#include <string>
#include <utility>

#include "shmetric/element_set.hpp"

namespace shm {

// Immutable, type-erased set-function oracle over a fixed ground set. Safe to
// evaluate concurrently provided the wrapped callable is.
class SetFunction {
 public:
  using Eval = std::function<double(const ElementSet&)>;

  SetFunction() = default;
  SetFunction(std::size_t n, Eval eval, std::string name = {})
      : n_(n), eval_(std::move(eval)), name_(std::move(name)) {}

  std::size_t n() const { return n_; }
  const std::string& name() const { return name_; }

  double operator()(const ElementSet& y) const {
    RequireSameSize(n_, y.n(), name_.empty() ? "SetFunction" : name_.c_str());
    return eval_(y);
  }

  // f(j | X) = f(X + j) - f(X); zero when j is already in X.
  double Gain(std::size_t j, const ElementSet& x) const {
    if (x.contains(j)) return 0.0;
    ElementSet xj = x;
    xj.insert(j);
    return (*this)(xj) - (*this)(x);
  }

 private:
  std::size_t n_ = 0;
  Eval eval_;
  std::string name_;
};

}  // namespace shm
