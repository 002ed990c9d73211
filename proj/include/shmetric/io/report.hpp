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


// Line-delimited JSON report records.

#pragma once

#include <string>
#include <vector>

#include "shmetric/apps/clustering.hpp"
#include "shmetric/apps/kbest.hpp"
#include "shmetric/checks.hpp"
#include "shmetric/io/json_format.hpp"
#include "shmetric/shsolvers.hpp"

namespace shm::io {

inline const char* DirectionName(Direction d) { return d == Direction::kMin ? "min" : "max"; }

inline Json GuaranteeToJson(const Guarantee& g) {
  Json j;
  j["factor"] = g.factor;
  j["label"] = g.label;
  j["in_expectation"] = g.in_expectation;
  return j;
}

inline Json SolutionToJson(const Solution& s) {
  Json j;
  j["solver"] = s.solver;
  j["set"] = SetToJson(s.set);
  j["objective"] = s.value;
  j["seed"] = s.seed ? Json(*s.seed) : Json(nullptr);
  j["iterations"] = s.iterations;
  j["trace"] = s.trace;
  j["surrogate"] = s.surrogate_value ? Json(*s.surrogate_value) : Json(nullptr);
  j["empirical_mean"] = s.empirical_mean ? Json(*s.empirical_mean) : Json(nullptr);
  j["guarantee"] = s.guarantee ? GuaranteeToJson(*s.guarantee) : Json(nullptr);
  return j;
}

inline Json CertificateToJson(const Certificate& c) {
  Json j;
  j["direction"] = DirectionName(c.direction);
  j["optimum"] = c.optimum;
  j["optimum_set"] = SetToJson(c.optimum_set);
  j["compared_value"] = c.compared_value;
  j["ratio"] = c.ratio;
  j["bound"] = c.bound ? Json(*c.bound) : Json(nullptr);
  j["bound_label"] = c.bound_label;
  j["certified"] = c.certified;
  j["pass"] = c.pass;
  return j;
}

inline Json PropertyReportToJson(const PropertyReport& r) {
  Json j;
  j["mode"] = r.mode == CheckOptions::Mode::kExhaustive ? "exhaustive" : "random";
  j["normalized"] = r.normalized;
  j["empty_value"] = r.empty_value;
  j["positive"] = r.positive;
  if (r.positive_witness) j["positive_witness"] = SetToJson(*r.positive_witness);
  j["monotone"] = r.monotone;
  if (r.monotone_witness) {
    Json w;
    w["smaller"] = SetToJson(r.monotone_witness->smaller);
    w["larger"] = SetToJson(r.monotone_witness->larger);
    w["f_smaller"] = r.monotone_witness->f_smaller;
    w["f_larger"] = r.monotone_witness->f_larger;
    j["monotone_witness"] = std::move(w);
  }
  j["submodular"] = r.submodular;
  j["submodular_violations"] = r.submodular_violations;
  Json ws = Json::array();
  for (const auto& w : r.submodular_witnesses) {
    Json x;
    x["a1"] = SetToJson(w.a1);
    x["a2"] = SetToJson(w.a2);
    x["lhs"] = w.lhs;
    x["rhs"] = w.rhs;
    ws.push_back(std::move(x));
  }
  j["submodular_witnesses"] = std::move(ws);
  j["pass"] = r.AllPass();
  return j;
}

inline Json MetricReportToJson(const MetricReport& r) {
  Json j;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json x;
    x["axiom"] = MetricAxiomName(w.axiom);
    x["a"] = SetToJson(w.a);
    x["b"] = SetToJson(w.b);
    x["c"] = SetToJson(w.c);
    x["lhs"] = w.lhs;
    x["rhs"] = w.rhs;
    ws.push_back(std::move(x));
  }
  j["witnesses"] = std::move(ws);
  j["pass"] = r.AllPass();
  return j;
}

inline Json KBestResultToJson(const apps::KBestResult& r) {
  Json j;
  j["method"] = std::string(apps::KBestMethodName(r.method));
  Json sums = Json::array();
  for (const auto& s : r.summaries) {
    Json x;
    x["set"] = SetToJson(s.set);
    x["quality"] = s.quality;
    x["diversity"] = s.diversity;
    x["objective"] = s.objective;
    sums.push_back(std::move(x));
  }
  j["summaries"] = std::move(sums);
  j["overlap"] = r.OverlapMatrix();
  j["mean_pairwise_overlap"] = r.MeanPairwiseOverlap();
  return j;
}

}  // namespace shm::io
