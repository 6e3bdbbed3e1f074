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

// Library side of the `tourneylab` command line: experiment configuration,
// the sweep report, and one function per subcommand. The executable in
// tools/ only parses flags and forwards here.

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tourneylab/error.hpp"
#include "tourneylab/generators.hpp"
#include "tourneylab/hamilton.hpp"
#include "tourneylab/sampling.hpp"
#include "tourneylab/serialize.hpp"
#include "tourneylab/structure.hpp"
#include "tourneylab/trn_format.hpp"

namespace tourneylab {

inline constexpr const char* kVersion = "0.1.0";

// Process exit code for each error family; 0 is success, 1 a usage error.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedMatrix:
    case ErrorKind::kDiagonalNonzero:
    case ErrorKind::kPairViolation:
    case ErrorKind::kParse:
      return 2;
    case ErrorKind::kIo:
      return 3;
    case ErrorKind::kBadParams:
    case ErrorKind::kSubsetOutOfRange:
      return 4;
    case ErrorKind::kBadConfig:
      return 5;
    case ErrorKind::kInvalidCertificate:
      return 6;
    case ErrorKind::kTooLarge:
      return 7;
    case ErrorKind::kEmptyPart:
      return 8;
  }
  return 9;
}

// ---------------------------------------------------------------------------
// gen

/// Family name plus parameters. Unused parameters are ignored.
struct FamilyParams {
  std::string family;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t t = 0;
  std::uint64_t seed = 0;
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"rotational",    "near-regular",  "transitive", "random",
                                              "theorem1-even", "theorem1-odd", "main"};
  return names;
}

inline Tournament generate(const FamilyParams& f) {
  auto need = [&](std::size_t value, const char* name) {
    if (value == 0) throw BadParams("family '" + f.family + "' needs " + name + " >= 1");
    return value;
  };
  if (f.family == "rotational") return rotational_tournament(need(f.k, "k"));
  if (f.family == "near-regular") return near_regular_tournament(need(f.m ? f.m : f.n, "m"), f.seed);
  if (f.family == "transitive") return transitive_tournament(need(f.n, "n"));
  if (f.family == "random") return random_tournament(need(f.n, "n"), f.seed);
  if (f.family == "theorem1-even") return extremal_theorem1_even(need(f.k, "k"));
  if (f.family == "theorem1-odd") return extremal_theorem1_odd(need(f.k, "k"));
  if (f.family == "main") return extremal_main(f.n, f.t, f.seed);
  throw BadParams("unknown family '" + f.family + "'");
}

inline Tournament cmd_gen(const FamilyParams& f, const std::filesystem::path& out_path) {
  Tournament t = generate(f);
  write_trn1_file(out_path, t);
  return t;
}

// ---------------------------------------------------------------------------
// estimate

struct ExperimentConfig {
  std::optional<FamilyParams> family;  // exactly one of family / tournament_path
  std::string tournament_path;
  std::vector<double> p_values;
  std::size_t t = 1;
  std::uint64_t trials = 10000;
  std::uint64_t master_seed = 0;
  std::string output_path;  // JSON report; empty = none
  std::string csv_path;     // CSV rows; empty = none
  unsigned threads = 0;     // 0 = auto
};

inline void check_config(const ExperimentConfig& c) {
  if (c.family.has_value() == !c.tournament_path.empty())
    throw BadConfig("give exactly one of 'family' or 'tournament'");
  if (c.p_values.empty()) throw BadConfig("'p_values' is empty");
  for (double p : c.p_values)
    if (!(p > 0.0 && p < 1.0)) throw BadConfig("p value " + std::to_string(p) + " outside (0,1)");
  if (c.trials < 1) throw BadConfig("'trials' must be at least 1");
  if (c.t < 1) throw BadConfig("'t' must be at least 1");
}

/// Reads the JSON experiment document:
///   {"family": "main", "params": {"n": 203, "t": 2, "k": .., "m": .., "seed": ..},
///    "tournament": "file.trn", "p_values": [..], "t": 2, "trials": 100000,
///    "seed": 1, "output": "report.json", "csv": "report.csv", "threads": 0}
inline ExperimentConfig parse_config(const Json& j) {
  ExperimentConfig c;
  try {
    if (j.contains("family")) {
      FamilyParams f;
      f.family = j.at("family").get<std::string>();
      const Json params = j.value("params", Json::object());
      f.k = params.value("k", std::size_t{0});
      f.n = params.value("n", std::size_t{0});
      f.m = params.value("m", std::size_t{0});
      f.t = params.value("t", std::size_t{0});
      f.seed = params.value("seed", std::uint64_t{0});
      c.family = f;
    }
    c.tournament_path = j.value("tournament", std::string{});
    c.p_values = j.value("p_values", std::vector<double>{});
    c.t = j.value("t", c.family ? (c.family->t ? c.family->t : std::size_t{1}) : std::size_t{1});
    c.trials = j.value("trials", c.trials);
    c.master_seed = j.value("seed", c.master_seed);
    c.output_path = j.value("output", std::string{});
    c.csv_path = j.value("csv", std::string{});
    c.threads = j.value("threads", 0u);
  } catch (const Json::exception& e) {
    throw BadConfig(e.what());
  }
  return c;
}

inline ExperimentConfig read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  try {
    return parse_config(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw BadConfig(path.string() + ": " + e.what());
  }
}

inline Json to_json(const ExperimentConfig& c) {
  Json j;
  if (c.family) {
    j["family"] = c.family->family;
    j["params"] = Json{{"k", c.family->k}, {"n", c.family->n}, {"m", c.family->m},
                       {"t", c.family->t}, {"seed", c.family->seed}};
  } else {
    j["tournament"] = c.tournament_path;
  }
  j["p_values"] = c.p_values;
  j["t"] = c.t;
  j["trials"] = c.trials;
  j["seed"] = c.master_seed;
  return j;
}

struct SweepRow {
  EstimateReport report;
  BoundSpec bound;
  double gap = 0.0;  // estimate - bound
};

struct SweepReport {
  ExperimentConfig config;
  std::size_t n = 0;
  std::vector<SweepRow> rows;
  std::string version = kVersion;
};

inline Json to_json(const SweepReport& s) {
  Json rows = Json::array();
  for (const SweepRow& r : s.rows)
    rows.push_back(Json{{"report", to_json(r.report)},
                        {"bound", r.bound.bound_value},
                        {"improved", r.bound.improved},
                        {"gap", r.gap}});
  return Json{{"version", s.version}, {"n", s.n}, {"config", to_json(s.config)}, {"rows", rows}};
}

inline std::string to_csv(const SweepReport& s) {
  std::ostringstream out;
  out.precision(17);
  out << "p,estimate,ci_low,ci_high,bound,gap\n";
  for (const SweepRow& r : s.rows)
    out << r.report.p << ',' << r.report.point_estimate << ',' << r.report.ci_low << ','
        << r.report.ci_high << ',' << r.bound.bound_value << ',' << r.gap << '\n';
  return out.str();
}

inline Tournament load_tournament(const ExperimentConfig& c) {
  return c.family ? generate(*c.family) : read_trn1_file(c.tournament_path);
}

/// One Monte Carlo estimate per configured p, each compared with the bound
/// 1-(1-p)^t (or its improved form). Writes the JSON and CSV files named in
/// the config.
inline SweepReport cmd_estimate(const ExperimentConfig& config) {
  check_config(config);
  const Tournament t = load_tournament(config);
  SweepReport s;
  s.config = config;
  s.n = t.size();
  for (double p : config.p_values) {
    SweepRow row;
    row.report = estimate_hamiltonian_probability(t, SamplePlan{p, config.trials, config.master_seed},
                                                  config.threads);
    row.bound = theoretical_bound(t.size(), config.t, p);
    row.gap = row.report.point_estimate - row.bound.bound_value;
    s.rows.push_back(row);
  }
  if (!config.output_path.empty()) write_text_file(config.output_path, to_json(s).dump(2) + "\n");
  if (!config.csv_path.empty()) write_text_file(config.csv_path, to_csv(s));
  return s;
}

// ---------------------------------------------------------------------------
// exact, check, verify

inline Json cmd_exact(const Tournament& t, double p) {
  const double prob = exact_hamiltonian_probability(t, p);
  return Json{{"n", t.size()}, {"p", p}, {"probability", prob}};
}

inline Json cmd_check(const Tournament& t) {
  const SemidegreeProfile prof = semidegrees(t);
  const SccDecomposition d = scc(t);
  Json j{{"n", t.size()},
         {"min_semidegree", prof.min_semidegree},
         {"witness", prof.witness},
         {"scc_count", d.component_count},
         {"hamiltonian", is_hamiltonian(t)}};
  if (auto cert = hamilton_cycle(t)) j["certificate"] = format_certificate(*cert);
  return j;
}

inline HamiltonCertificate read_certificate_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str());
}

/// Throws InvalidCertificate at the first bad position.
inline void cmd_verify(const std::filesystem::path& tournament_path,
                       const std::filesystem::path& certificate_path) {
  const Tournament t = read_trn1_file(tournament_path);
  check_certificate(t, read_certificate_file(certificate_path));
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  double eps = 0.01;
  std::optional<std::size_t> k;  // default: default_connector_k(p, t, sigma)
  std::size_t t = 1;
  double p = 0.5;
  double sigma = 0.1;
  std::size_t effort = 16;
  std::uint64_t seed = 0;
  CutMode mode = CutMode::kAuto;
};

inline constexpr const char* kBranchCut = "almost-directed cut";
inline constexpr const char* kBranchNoCut = "no almost-directed cut";
inline constexpr const char* kBranchInconclusive = "inconclusive";

/// Structural dichotomy for one tournament. The best balanced cut decides the
/// branch: density >= 1-eps is an almost-directed cut; a lower exact optimum
/// proves there is none; a lower heuristic optimum is inconclusive. On the cut
/// branch the cut is cleaned, refined, and its connectors and B->A matching
/// reported.
inline Json cmd_analyze(const Tournament& t, const AnalyzeOptions& o) {
  if (!(o.eps > 0.0 && o.eps < 1.0)) throw BadParams("eps must lie in (0,1)");
  const std::size_t k = o.k ? *o.k : default_connector_k(o.p, o.t, o.sigma);
  const CutResult cut = balanced_cut_search(t, o.effort, o.mode, o.seed);
  Json j{{"n", t.size()}, {"eps", o.eps}, {"k", k}, {"t", o.t}, {"cut", to_json(cut)}};

  if (cut.density < 1.0 - o.eps) {
    j["branch"] = cut.method == CutMethod::kExact ? kBranchNoCut : kBranchInconclusive;
    return j;
  }
  j["branch"] = kBranchCut;
  const double clean_eps = std::min(o.eps, kMaxCleanEps);
  const CleanResult clean = clean_to_good_partition(t, cut.A, cut.B, clean_eps);
  j["clean"] = Json{{"eps", clean_eps},
                    {"partition", to_json(clean.partition)},
                    {"goodness", to_json(clean.report)},
                    {"A0_minus", to_json(clean.a_minus)},
                    {"A0_plus", to_json(clean.a_plus)},
                    {"B0_plus", to_json(clean.b_plus)},
                    {"B0_minus", to_json(clean.b_minus)}};
  const RefineResult refined = refine_partition(t, clean.partition, k, o.t);
  j["refine"] = Json{{"partition", to_json(refined.partition)},
                     {"connector_shortcut", refined.connector_shortcut},
                     {"qualifying_A", refined.qualifying_a},
                     {"qualifying_B", refined.qualifying_b}};
  const VertexSubset connectors = k_connectors(t, refined.partition, k);
  j["connectors"] = to_json(connectors);
  j["connector_count"] = connectors.size();
  j["matching"] = to_json(max_BA_matching(t, refined.partition));
  return j;
}

}  // namespace tourneylab
