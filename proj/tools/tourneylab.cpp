// Copyright 2026 The tourneylab Authors
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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tourneylab/commands.hpp"

using namespace tourneylab;

int main(int argc, char** argv) {
  CLI::App app{"tourneylab: Hamiltonicity of random subtournaments"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // gen
  FamilyParams gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a tournament family as a TRN1 file");
  gen_cmd->add_option("family", gen.family, "Family name")
      ->required()
      ->check(CLI::IsMember(family_names()));
  gen_cmd->add_option("--k", gen.k, "k for rotational / theorem1-even / theorem1-odd");
  gen_cmd->add_option("--n", gen.n, "Vertex count for transitive / random / main");
  gen_cmd->add_option("--m", gen.m, "Vertex count for near-regular");
  gen_cmd->add_option("--t", gen.t, "Size of X for main");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("-o,--out", gen_out, "Output path")->required();

  // estimate
  std::string est_config, est_tournament, est_family, est_output, est_csv;
  std::vector<double> est_p;
  std::size_t est_t = 0, est_n = 0, est_k = 0, est_m = 0, est_family_t = 0;
  std::uint64_t est_trials = 0, est_seed = 0, est_family_seed = 0;
  unsigned est_threads = 0;
  auto* est_cmd = app.add_subcommand("estimate", "Monte Carlo estimate of P[T_p Hamiltonian]");
  est_cmd->add_option("-c,--config", est_config, "JSON experiment config");
  est_cmd->add_option("--tournament", est_tournament, "TRN1 file");
  est_cmd->add_option("--family", est_family, "Generate instead of reading a file")
      ->check(CLI::IsMember(family_names()));
  est_cmd->add_option("--n", est_n);
  est_cmd->add_option("--k", est_k);
  est_cmd->add_option("--m", est_m);
  est_cmd->add_option("--family-t", est_family_t, "t parameter of the generated family");
  est_cmd->add_option("--family-seed", est_family_seed);
  est_cmd->add_option("-p,--p", est_p, "Inclusion probabilities");
  est_cmd->add_option("--t", est_t, "t of the bound 1-(1-p)^t");
  est_cmd->add_option("--trials", est_trials);
  est_cmd->add_option("--seed", est_seed, "Master seed");
  est_cmd->add_option("-o,--output", est_output, "JSON report path");
  est_cmd->add_option("--csv", est_csv, "CSV report path");
  est_cmd->add_option("--threads", est_threads, "Worker threads (0 = auto)");

  // exact
  std::string exact_file;
  double exact_p = 0.5;
  auto* exact_cmd = app.add_subcommand("exact", "Exact probability by subset enumeration (n <= 20)");
  exact_cmd->add_option("tournament", exact_file)->required();
  exact_cmd->add_option("-p,--p", exact_p);

  // analyze
  std::string analyze_file;
  AnalyzeOptions analyze;
  std::size_t analyze_k = 0;
  std::string analyze_mode = "auto";
  auto* analyze_cmd = app.add_subcommand("analyze", "Cut dichotomy and connector structure");
  analyze_cmd->add_option("tournament", analyze_file)->required();
  analyze_cmd->add_option("--eps", analyze.eps);
  analyze_cmd->add_option("--k", analyze_k, "Connector threshold (default from p, t, sigma)");
  analyze_cmd->add_option("--t", analyze.t);
  analyze_cmd->add_option("--p", analyze.p, "p used for the default k");
  analyze_cmd->add_option("--sigma", analyze.sigma, "Failure budget used for the default k");
  analyze_cmd->add_option("--effort", analyze.effort, "Local search restarts");
  analyze_cmd->add_option("--seed", analyze.seed);
  analyze_cmd->add_option("--mode", analyze_mode)->check(CLI::IsMember({"auto", "exact", "heuristic"}));

  // verify
  std::string verify_file, verify_cert;
  auto* verify_cmd = app.add_subcommand("verify", "Check a Hamilton cycle certificate");
  verify_cmd->add_option("tournament", verify_file)->required();
  verify_cmd->add_option("certificate", verify_cert)->required();

  // check
  std::string check_file, check_cert_out;
  auto* check_cmd = app.add_subcommand("check", "Validate a TRN1 file and report its structure");
  check_cmd->add_option("tournament", check_file)->required();
  check_cmd->add_option("--certificate-out", check_cert_out, "Write the Hamilton cycle here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*gen_cmd) {
      const Tournament t = cmd_gen(gen, gen_out);
      std::cout << "wrote " << gen_out << " (n=" << t.size() << ")\n";
    } else if (*est_cmd) {
      ExperimentConfig c;
      if (!est_config.empty()) c = read_config_file(est_config);
      if (!est_tournament.empty()) {
        c.tournament_path = est_tournament;
        c.family.reset();
      }
      if (!est_family.empty()) {
        c.family = FamilyParams{est_family, est_k, est_n, est_m, est_family_t, est_family_seed};
        c.tournament_path.clear();
      }
      if (!est_p.empty()) c.p_values = est_p;
      if (est_t) c.t = est_t;
      else if (est_config.empty() && c.family && c.family->t) c.t = c.family->t;
      if (est_trials) c.trials = est_trials;
      if (est_cmd->count("--seed")) c.master_seed = est_seed;
      if (!est_output.empty()) c.output_path = est_output;
      if (!est_csv.empty()) c.csv_path = est_csv;
      if (est_threads) c.threads = est_threads;
      const SweepReport report = cmd_estimate(c);
      if (c.output_path.empty()) std::cout << to_json(report).dump(2) << "\n";
      else std::cout << to_csv(report);
    } else if (*exact_cmd) {
      std::cout << cmd_exact(read_trn1_file(exact_file), exact_p).dump(2) << "\n";
    } else if (*analyze_cmd) {
      if (analyze_cmd->count("--k")) analyze.k = analyze_k;
      analyze.mode = analyze_mode == "exact"       ? CutMode::kExact
                     : analyze_mode == "heuristic" ? CutMode::kHeuristic
                                                   : CutMode::kAuto;
      std::cout << cmd_analyze(read_trn1_file(analyze_file), analyze).dump(2) << "\n";
    } else if (*verify_cmd) {
      cmd_verify(verify_file, verify_cert);
      std::cout << "ok\n";
    } else if (*check_cmd) {
      const Tournament t = read_trn1_file(check_file);
      const Json report = cmd_check(t);
      if (!check_cert_out.empty() && report.contains("certificate"))
        write_text_file(check_cert_out, report["certificate"].get<std::string>() + "\n");
      std::cout << report.dump(2) << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
