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


// Implementation of the `shm` command-line tool. Each command writes a human
// readable table to `out`, optional JSON-lines records to a report file, and
// returns the process exit code.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shmetric/io/json_format.hpp"
#include "shmetric/io/report.hpp"
#include "shmetric/shmetric.hpp"

namespace shm::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kInfeasible = 2,
  kFailure = 3,
};

// Appends one JSON record per line; a no-op when no path is configured.
class ReportSink {
 public:
  explicit ReportSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }

  void Write(const io::Json& record) {
    if (file_.is_open()) file_ << record.dump() << "\n";
  }

 private:
  std::ofstream file_;
};

struct SolveOptions {
  std::string direction = "min";  // min | max
  std::string instance;
  std::string solver;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool certify = false;
  double tol = 1e-7;
  std::size_t draws = 1;
  std::string out;
};

struct CheckCommandOptions {
  std::string instance;
  std::string function;
  std::string mode = "exhaustive";  // exhaustive | random
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::string out;
};

struct ClusterOptions {
  std::string corpus;
  std::string synth;
  std::string distance = "clustered-sqrt";  // hamming | clustered-sqrt
  std::size_t k = 10;
  std::size_t ell = 100;
  std::string init = "kmeans++";  // kmeans++ | farthest-first
  std::string order = "corpus";   // corpus | shuffled
  std::size_t quota = 0;
  std::size_t trials = 10;
  std::uint64_t seed = 7;
  std::string out;
};

struct KBestOptions {
  std::string corpus;
  std::string synth;
  std::size_t k = 5;
  std::size_t ell = 10;
  std::string method = "tp";  // hm | sp | tp
  std::uint64_t seed = 0;
  std::string out;
};

struct GenOptions {
  std::string preset;
  std::uint64_t seed = 7;
  std::string out;
};

namespace detail {

inline double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline std::string Num(double v, int precision = 6) {
  std::ostringstream ss;
  ss << std::setprecision(precision) << v;
  return ss.str();
}

inline void Row(std::ostream& out, const std::string& key, const std::string& value) {
  out << "  " << std::left << std::setw(18) << key << value << "\n";
}

inline double Mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

inline double StdDev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = Mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

// Maps library exceptions onto the exit-code contract.
inline int Guard(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InfeasibleConstraint& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const UnsupportedConstraint& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const GroundSetTooLarge& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

inline Solution RunSolver(const ShInstance& inst, const SolveOptions& opt) {
  const std::optional<std::uint64_t> seed = opt.seed_given ? std::optional<std::uint64_t>(opt.seed) : std::nullopt;
  if (opt.direction == "min") {
    if (opt.solver == "union-split") {
      MinNormOptions mn;
      mn.tol = opt.tol;
      return UnionSplitMin(inst, mn);
    }
    if (opt.solver == "best-b") return BestB(inst);
    if (opt.solver == "major-min") return MajorMin(inst);
    if (opt.solver == "brute") return BruteForceSolve(inst, Direction::kMin);
  } else if (opt.direction == "max") {
    if (opt.solver == "union-split-max") {
      UnionSplitMaxOptions us;
      us.seed = seed;
      us.draws = opt.draws;
      if (inst.constraint().kind == Constraint::Kind::kCardAtMost && !us.seed) us.seed = 0;
      return UnionSplitMax(inst, us);
    }
    if (opt.solver == "rand-set") return RandSetMax(inst, seed.value_or(0), opt.draws);
    if (opt.solver == "brute") return BruteForceSolve(inst, Direction::kMax);
  } else {
    throw std::invalid_argument("direction must be min or max");
  }
  throw std::invalid_argument("unknown solver \"" + opt.solver + "\" for " + opt.direction);
}

}  // namespace detail

// Presets. Corpus presets use the synthetic clustering constants: 100
// documents, 10 clusters, 1000 features in 100 word classes, 10 words each.

inline std::optional<apps::SynthCorpusParams> CorpusPreset(const std::string& name) {
  apps::SynthCorpusParams p;
  if (name == "synth-disjoint") return p;
  if (name == "synth-sampled") {
    p.overlap = apps::SynthCorpusParams::Overlap::kSampled;
    return p;
  }
  return std::nullopt;
}

inline io::Collection KBestSynthCollection(std::uint64_t seed) {
  const auto sim = apps::SynthSimilarity(apps::SynthCollectionParams{}, seed);
  return io::Collection{PolymatroidSpec::FacilityLocation(sim), std::nullopt};
}

inline const std::vector<std::string>& PresetNames() {
  static const std::vector<std::string> kNames = {
      "synth-disjoint", "synth-sampled", "kbest-synth",          "tightness-alpha2",
      "tightness-alpha4",     "tightness-alpha16",   "best-b-counterexample", "sqrt-shift-example"};
  return kNames;
}

// Two terms on V = {0, 1} with B1 = {0}, B2 = {1} and f(Y) = |Y|^(1/alpha).
inline ShInstance TightnessInstance(double alpha) {
  return ShInstance::Homogeneous(PolymatroidSpec::ConcaveCardinality(2, alpha),
                                 {ElementSet(2, {0}), ElementSet(2, {1})});
}

// f = |Y| on three elements with every two-element set as a B.
inline ShInstance BestBCounterexample() {
  return ShInstance::Homogeneous(PolymatroidSpec::Modular({1.0, 1.0, 1.0}),
                                 {ElementSet(3, {0, 1}), ElementSet(3, {0, 2}), ElementSet(3, {1, 2})});
}

// f(Y) = sqrt(|Y|) shifted by a two-element B; the shifted function is not
// submodular.
inline io::FunctionFile SqrtShiftExample() {
  return io::FunctionFile{PolymatroidSpec::ConcaveCardinality(3, 2.0), ElementSet(3, {0, 1})};
}

// Returns the canonical file text for a preset, or nullopt if unknown.
inline std::optional<std::string> GeneratePreset(const std::string& name, std::uint64_t seed) {
  if (auto p = CorpusPreset(name)) return io::Dump(io::CorpusToJson(apps::SynthCorpus(*p, seed)));
  if (name == "kbest-synth") return io::Dump(io::CollectionToJson(KBestSynthCollection(seed)));
  if (name == "tightness-alpha2") return io::DumpInstance(TightnessInstance(2.0));
  if (name == "tightness-alpha4") return io::DumpInstance(TightnessInstance(4.0));
  if (name == "tightness-alpha16") return io::DumpInstance(TightnessInstance(16.0));
  if (name == "best-b-counterexample") return io::DumpInstance(BestBCounterexample());
  if (name == "sqrt-shift-example") return io::Dump(io::FunctionFileToJson(SqrtShiftExample()));
  return std::nullopt;
}

// solve / certify

inline int Solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::Guard(err, [&] {
    const ShInstance inst = io::LoadInstance(opt.instance);
    ReportSink sink(opt.out);
    const auto start = std::chrono::steady_clock::now();
    const Solution sol = detail::RunSolver(inst, opt);
    const double wall = detail::Seconds(start);
    const double recheck = ShObjective(inst, sol.set);
    if (std::abs(recheck - sol.value) > 1e-9 * std::max(1.0, std::abs(recheck))) {
      throw std::logic_error("reported objective does not re-evaluate");
    }

    io::Json rec;
    rec["record"] = "solve";
    rec["direction"] = opt.direction;
    rec["instance"] = opt.instance;
    rec["n"] = inst.n();
    rec["m"] = inst.m();
    rec["constraint"] = inst.constraint().ToString();
    const io::Json fields = io::SolutionToJson(sol);
    for (const auto& [k, v] : fields.items()) rec[k] = v;
    rec["wall_seconds"] = wall;

    out << "solve " << opt.direction << " (" << sol.solver << ")\n";
    detail::Row(out, "instance", opt.instance);
    detail::Row(out, "n, m", std::to_string(inst.n()) + ", " + std::to_string(inst.m()));
    detail::Row(out, "constraint", inst.constraint().ToString());
    detail::Row(out, "set", sol.set.ToString());
    detail::Row(out, "objective", detail::Num(sol.value, 10));
    if (sol.empirical_mean) detail::Row(out, "empirical mean", detail::Num(*sol.empirical_mean, 10));
    if (sol.surrogate_value) detail::Row(out, "surrogate", detail::Num(*sol.surrogate_value, 10));
    detail::Row(out, "iterations", std::to_string(sol.iterations));
    if (sol.seed) detail::Row(out, "seed", std::to_string(*sol.seed));
    if (sol.guarantee) detail::Row(out, "guarantee", sol.guarantee->label);
    detail::Row(out, "wall time (s)", detail::Num(wall, 4));

    int code = kOk;
    if (opt.certify) {
      const Certificate cert = Certify(inst, sol, opt.direction == "min" ? Direction::kMin : Direction::kMax);
      rec["certificate"] = io::CertificateToJson(cert);
      detail::Row(out, "optimum", detail::Num(cert.optimum, 10) + " at " + cert.optimum_set.ToString());
      detail::Row(out, "ratio", detail::Num(cert.ratio, 8));
      if (cert.certified) {
        detail::Row(out, "bound", detail::Num(*cert.bound, 8));
        detail::Row(out, "certified", cert.pass ? "PASS" : "FAIL");
      } else {
        detail::Row(out, "certified", "no guarantee for this instance");
      }
      if (!cert.pass) code = kFailure;
    }
    sink.Write(rec);
    return code;
  });
}

// check

inline int Check(const CheckCommandOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::Guard(err, [&] {
    if (opt.instance.empty() == opt.function.empty()) {
      throw std::invalid_argument("pass exactly one of --instance or --function");
    }
    if (opt.mode != "exhaustive" && opt.mode != "random") throw std::invalid_argument("mode must be exhaustive or random");
    ReportSink sink(opt.out);
    const CheckOptions random = CheckOptions::Randomized(opt.trials, opt.seed);
    const CheckOptions exhaustive = CheckOptions::Exhaustive();
    bool all_pass = true;

    // Exhaustive mode falls back to sampling above the enumeration limits.
    auto property_check = [&](const SetFunction& f) {
      const bool ex = opt.mode == "exhaustive" && f.n() <= exhaustive.exhaustive_limit;
      return CheckPolymatroid(f, ex ? exhaustive : random);
    };
    auto metric_check = [&](const PolymatroidSpec& f) {
      const bool ex = opt.mode == "exhaustive" && f.n() <= exhaustive.triple_limit;
      return MetricAxiomCheck(f, ex ? exhaustive : random);
    };
    auto print_property = [&](const PropertyReport& r) {
      detail::Row(out, "normalized", r.normalized ? "yes" : "NO");
      detail::Row(out, "positive", r.positive ? "yes" : "NO");
      detail::Row(out, "monotone", r.monotone ? "yes" : "NO");
      detail::Row(out, "submodular", r.submodular ? "yes" : "NO (" + std::to_string(r.submodular_violations) +
                                                                    " violations)");
      if (!r.submodular_witnesses.empty()) {
        const auto& w = r.submodular_witnesses.front();
        detail::Row(out, "witness", "A1=" + w.a1.ToString() + " A2=" + w.a2.ToString() + ": " +
                                        detail::Num(w.lhs, 12) + " < " + detail::Num(w.rhs, 12));
      }
    };

    auto check_function = [&](const PolymatroidSpec& f, const std::optional<ElementSet>& shift,
                              const std::string& label) {
      io::Json rec;
      rec["record"] = "check";
      rec["target"] = label;
      rec["type"] = std::string(f.KindName());
      rec["n"] = f.n();
      out << "check " << label << " (" << f.KindName() << ", n=" << f.n() << ")\n";
      if (shift) {
        rec["shift"] = io::SetToJson(*shift);
        detail::Row(out, "shift", shift->ToString());
        const PropertyReport pr = property_check(ShiftedOracle(f, *shift));
        rec["properties"] = io::PropertyReportToJson(pr);
        print_property(pr);
        all_pass = all_pass && pr.AllPass();
      } else {
        const PropertyReport pr = property_check(f.AsFunction());
        const MetricReport mr = metric_check(f);
        rec["properties"] = io::PropertyReportToJson(pr);
        rec["metric"] = io::MetricReportToJson(mr);
        print_property(pr);
        detail::Row(out, "metric axioms", mr.AllPass() ? "hold (" + std::to_string(mr.checked) + " checked)"
                                                       : "VIOLATED (" + std::to_string(mr.violations) + ")");
        all_pass = all_pass && pr.AllPass() && mr.AllPass();
      }
      sink.Write(rec);
    };

    if (!opt.function.empty()) {
      const io::FunctionFile ff = io::ParseFunctionFile(io::ReadFile(opt.function));
      check_function(ff.function, ff.shift, opt.function);
    } else {
      const ShInstance inst = io::LoadInstance(opt.instance);
      std::vector<const PolymatroidSpec*> seen;
      for (std::size_t i = 0; i < inst.m(); ++i) {
        bool dup = false;
        for (const auto* s : seen) dup = dup || *s == inst.functions()[i];
        if (dup) continue;
        seen.push_back(&inst.functions()[i]);
        check_function(inst.functions()[i], std::nullopt, opt.instance + " f" + std::to_string(i));
      }
    }
    out << (all_pass ? "all checks pass\n" : "violations found\n");
    return all_pass ? kOk : kFailure;
  });
}

// cluster

inline int Cluster(const ClusterOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::Guard(err, [&] {
    if (opt.corpus.empty() == opt.synth.empty()) throw std::invalid_argument("pass exactly one of --corpus or --synth");
    std::optional<apps::SynthCorpusParams> preset;
    std::optional<apps::Corpus> fixed;
    if (!opt.synth.empty()) {
      preset = CorpusPreset(opt.synth);
      if (!preset) throw std::invalid_argument("unknown corpus preset \"" + opt.synth + "\"");
    } else {
      fixed = io::ParseCorpus(io::ReadFile(opt.corpus));
    }
    if (opt.distance != "hamming" && opt.distance != "clustered-sqrt") {
      throw std::invalid_argument("distance must be hamming or clustered-sqrt");
    }
    apps::KMeansOptions km;
    km.k = opt.k;
    km.ell = opt.ell;
    km.quota = opt.quota;
    if (opt.init == "kmeans++") {
      km.init = apps::InitMethod::kKMeansPlusPlus;
    } else if (opt.init == "farthest-first") {
      km.init = apps::InitMethod::kFarthestFirst;
    } else {
      throw std::invalid_argument("init must be kmeans++ or farthest-first");
    }
    if (opt.order == "corpus") {
      km.order = apps::AssignOrder::kCorpus;
    } else if (opt.order == "shuffled") {
      km.order = apps::AssignOrder::kShuffled;
    } else {
      throw std::invalid_argument("order must be corpus or shuffled");
    }

    ReportSink sink(opt.out);
    std::vector<double> accuracies, ham_scores, sub_scores;
    out << "cluster " << (preset ? opt.synth : opt.corpus) << " distance=" << opt.distance << " init=" << opt.init
        << " k=" << opt.k << " ell=" << opt.ell << "\n";
    out << "  trial  accuracy  iters  kmeans-score(hamming)  kmeans-score(submodular)\n";
    for (std::size_t t = 0; t < opt.trials; ++t) {
      const apps::Corpus corpus = preset ? apps::SynthCorpus(*preset, DeriveSeed(opt.seed, 2 * t)) : *fixed;
      const PolymatroidSpec f = opt.distance == "hamming" ? apps::Hamming(corpus.n) : corpus.ClusteredSqrt();
      km.seed = DeriveSeed(opt.seed, 2 * t + 1);
      const auto start = std::chrono::steady_clock::now();
      const apps::ClusteringResult r = apps::ShKMeans(corpus, f, km);
      const double wall = detail::Seconds(start);

      io::Json rec;
      rec["record"] = "cluster_trial";
      rec["trial"] = t;
      rec["seed"] = km.seed;
      rec["iterations"] = r.iterations;
      rec["converged"] = r.converged;
      std::optional<double> acc;
      if (corpus.labels) {
        acc = apps::Accuracy(r, corpus);
        accuracies.push_back(*acc);
      }
      rec["accuracy"] = acc ? io::Json(*acc) : io::Json(nullptr);
      const double ham = apps::KMeansScore(r, corpus, apps::Hamming(corpus.n));
      ham_scores.push_back(ham);
      rec["kmeans_score_hamming"] = ham;
      std::optional<double> sub;
      if (corpus.word_classes) {
        sub = apps::KMeansScore(r, corpus, corpus.ClusteredSqrt());
        sub_scores.push_back(*sub);
      }
      rec["kmeans_score_submodular"] = sub ? io::Json(*sub) : io::Json(nullptr);
      rec["assignment"] = r.assignment;
      rec["objective_trace"] = r.objective_trace;
      rec["wall_seconds"] = wall;
      sink.Write(rec);

      out << "  " << std::setw(5) << t << "  " << std::setw(8) << (acc ? detail::Num(*acc, 4) : "-") << "  "
          << std::setw(5) << r.iterations << "  " << std::setw(21) << detail::Num(ham, 8) << "  " << std::setw(24)
          << (sub ? detail::Num(*sub, 8) : "-") << "\n";
    }
    io::Json summary;
    summary["record"] = "cluster_summary";
    summary["trials"] = opt.trials;
    summary["accuracy_mean"] = accuracies.empty() ? io::Json(nullptr) : io::Json(detail::Mean(accuracies));
    summary["accuracy_std"] = accuracies.empty() ? io::Json(nullptr) : io::Json(detail::StdDev(accuracies));
    summary["kmeans_score_hamming_mean"] = detail::Mean(ham_scores);
    summary["kmeans_score_submodular_mean"] = sub_scores.empty() ? io::Json(nullptr) : io::Json(detail::Mean(sub_scores));
    sink.Write(summary);
    if (!accuracies.empty()) {
      out << "  accuracy " << detail::Num(100.0 * detail::Mean(accuracies), 4) << "% (+-"
          << detail::Num(100.0 * detail::StdDev(accuracies), 3) << ")\n";
    }
    return kOk;
  });
}

// kbest

inline int KBest(const KBestOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::Guard(err, [&] {
    if (opt.corpus.empty() == opt.synth.empty()) throw std::invalid_argument("pass exactly one of --corpus or --synth");
    io::Collection coll = [&] {
      if (opt.synth.empty()) return io::ParseCollection(io::ReadFile(opt.corpus));
      if (opt.synth != "kbest-synth") throw std::invalid_argument("unknown collection preset \"" + opt.synth + "\"");
      return KBestSynthCollection(opt.seed);
    }();
    apps::KBestMethod method;
    std::optional<PolymatroidSpec> diversity;
    if (opt.method == "hm") {
      method = apps::KBestMethod::kHM;
      diversity = apps::Hamming(coll.quality.n());
    } else if (opt.method == "sp" || opt.method == "tp") {
      method = opt.method == "sp" ? apps::KBestMethod::kSP : apps::KBestMethod::kTP;
      diversity = coll.diversity ? *coll.diversity : coll.quality;
    } else {
      throw std::invalid_argument("method must be hm, sp or tp");
    }
    const apps::KBestResult r = apps::DiverseKBest(coll.quality, diversity, opt.k, opt.ell, method, opt.seed);

    io::Json rec = io::KBestResultToJson(r);
    rec["record"] = "kbest";
    rec["k"] = opt.k;
    rec["ell"] = opt.ell;
    rec["seed"] = opt.seed;
    ReportSink sink(opt.out);
    sink.Write(rec);

    out << "kbest method=" << opt.method << " k=" << opt.k << " ell=" << opt.ell << "\n";
    out << "  t  quality       diversity     objective     set\n";
    for (std::size_t t = 0; t < r.summaries.size(); ++t) {
      const auto& s = r.summaries[t];
      out << "  " << std::left << std::setw(3) << t << std::setw(14) << detail::Num(s.quality, 8) << std::setw(14)
          << detail::Num(s.diversity, 8) << std::setw(14) << detail::Num(s.objective, 8) << s.set.ToString() << "\n";
    }
    out << std::right << "  mean pairwise overlap " << detail::Num(r.MeanPairwiseOverlap(), 6) << "\n";
    return kOk;
  });
}

// gen

inline int Gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::Guard(err, [&] {
    const auto text = GeneratePreset(opt.preset, opt.seed);
    if (!text) {
      err << "unknown preset \"" << opt.preset << "\"; known presets:";
      for (const auto& n : PresetNames()) err << " " << n;
      err << "\n";
      return kParseError;
    }
    if (opt.out.empty()) {
      out << *text;
    } else {
      io::WriteFile(opt.out, *text);
      out << "wrote " << opt.out << "\n";
    }
    return kOk;
  });
}

}  // namespace shm::cli
