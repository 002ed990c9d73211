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

// Umbrella header.

#pragma once

#include "shmetric/apps/clustering.hpp"
#include "shmetric/apps/corpus.hpp"
#include "shmetric/apps/kbest.hpp"
#include "shmetric/checks.hpp"
#include "shmetric/constraint.hpp"
#include "shmetric/element_set.hpp"
#include "shmetric/instance.hpp"
#include "shmetric/maxsolve.hpp"
#include "shmetric/minsolve.hpp"
#include "shmetric/polymatroid.hpp"
#include "shmetric/rng.hpp"
#include "shmetric/set_function.hpp"
#include "shmetric/shsolvers.hpp"
