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


#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

void AddSolveFlags(CLI::App* cmd, shm::cli::SolveOptions& o) {
  cmd->add_option("direction", o.direction, "min or max")->required()->check(CLI::IsMember({"min", "max"}));
  cmd->add_option("--instance", o.instance, "instance file")->required();
  cmd->add_option("--solver", o.solver,
                  "union-split | best-b | major-min | brute (min); union-split-max | rand-set | brute (max)")
      ->required();
  cmd->add_option("--seed", o.seed, "random seed for randomized solvers");
  cmd->add_option("--tol", o.tol, "min-norm-point duality gap tolerance");
  cmd->add_option("--draws", o.draws, "random draws for rand-set and the cardinality-constrained max solver");
  cmd->add_option("--out", o.out, "JSON-lines report path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular Hamming metric toolkit"};
  app.require_subcommand(1);

  shm::cli::SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Minimize or maximize a submodular Hamming objective");
  AddSolveFlags(solve_cmd, solve);
  solve_cmd->add_flag("--certify", solve.certify, "compare against the exhaustive optimum");

  shm::cli::SolveOptions certify;
  certify.certify = true;
  CLI::App* certify_cmd = app.add_subcommand("certify", "Solve and certify against the exhaustive optimum");
  AddSolveFlags(certify_cmd, certify);

  shm::cli::CheckCommandOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "Check polymatroid properties and metric axioms");
  auto* inst_opt = check_cmd->add_option("--instance", check.instance, "instance file");
  auto* fn_opt = check_cmd->add_option("--function", check.function, "function file");
  inst_opt->excludes(fn_opt);
  check_cmd->add_option("--mode", check.mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  check_cmd->add_option("--trials", check.trials, "samples in random mode");
  check_cmd->add_option("--seed", check.seed, "random seed");
  check_cmd->add_option("--out", check.out, "JSON-lines report path");

  shm::cli::ClusterOptions cluster;
  CLI::App* cluster_cmd = app.add_subcommand("cluster", "Balanced k-means under a submodular Hamming distance");
  auto* corpus_opt = cluster_cmd->add_option("--corpus", cluster.corpus, "corpus file");
  auto* synth_opt = cluster_cmd->add_option("--synth", cluster.synth, "synth-disjoint | synth-sampled");
  corpus_opt->excludes(synth_opt);
  cluster_cmd->add_option("--distance", cluster.distance, "hamming or clustered-sqrt")
      ->check(CLI::IsMember({"hamming", "clustered-sqrt"}));
  cluster_cmd->add_option("--k", cluster.k, "number of clusters");
  cluster_cmd->add_option("--ell", cluster.ell, "minimum center size");
  cluster_cmd->add_option("--init", cluster.init, "kmeans++ or farthest-first")
      ->check(CLI::IsMember({"kmeans++", "farthest-first"}));
  cluster_cmd->add_option("--order", cluster.order, "assignment order: corpus or shuffled")
      ->check(CLI::IsMember({"corpus", "shuffled"}));
  cluster_cmd->add_option("--quota", cluster.quota, "cluster size cap (0: ceil(docs / k))");
  cluster_cmd->add_option("--trials", cluster.trials, "number of trials");
  cluster_cmd->add_option("--seed", cluster.seed, "root seed");
  cluster_cmd->add_option("--out", cluster.out, "JSON-lines report path");

  shm::cli::KBestOptions kbest;
  CLI::App* kbest_cmd = app.add_subcommand("kbest", "Diverse k-best summaries");
  auto* coll_opt = kbest_cmd->add_option("--corpus,--collection", kbest.corpus, "collection file");
  auto* ksynth_opt = kbest_cmd->add_option("--synth", kbest.synth, "kbest-synth");
  coll_opt->excludes(ksynth_opt);
  kbest_cmd->add_option("--k", kbest.k, "number of summaries");
  kbest_cmd->add_option("--ell", kbest.ell, "summary size");
  kbest_cmd->add_option("--method", kbest.method, "hm, sp or tp")->check(CLI::IsMember({"hm", "sp", "tp"}));
  kbest_cmd->add_option("--seed", kbest.seed, "seed for the synthetic collection");
  kbest_cmd->add_option("--out", kbest.out, "JSON-lines report path");

  shm::cli::GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a preset corpus, collection, instance or function file");
  gen_cmd->add_option("--preset", gen.preset, "preset name")->required();
  gen_cmd->add_option("--seed", gen.seed, "seed for randomized presets");
  gen_cmd->add_option("--out", gen.out, "output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : shm::cli::kParseError;
  }

  solve.seed_given = solve_cmd->count("--seed") > 0;
  certify.seed_given = certify_cmd->count("--seed") > 0;

  if (*solve_cmd) return shm::cli::Solve(solve, std::cout, std::cerr);
  if (*certify_cmd) return shm::cli::Solve(certify, std::cout, std::cerr);
  if (*check_cmd) return shm::cli::Check(check, std::cout, std::cerr);
  if (*cluster_cmd) return shm::cli::Cluster(cluster, std::cout, std::cerr);
  if (*kbest_cmd) return shm::cli::KBest(kbest, std::cout, std::cerr);
  if (*gen_cmd) return shm::cli::Gen(gen, std::cout, std::cerr);
  return shm::cli::kParseError;
}
