// Copyright 2026 The Liouville DJ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "harness/commands.h"
#include "harness/config.h"
#include "harness/report.h"
#include "liouville/errors.h"

using namespace liouville;
using namespace liouville::harness;

namespace {

struct CommonFlags {
  std::string backend = "diagonal";
  std::string detection = "ancilla";
  std::optional<double> epsilon;
  std::optional<double> thermal_p;
  double tolerance = kDefaultSignalTolerance;
  std::string format = "json";
  std::string out;
  Capacity capacity{};
};

void add_common(CLI::App *cmd, CommonFlags &f, bool allow_both) {
  cmd->add_option("--backend", f.backend, allow_both ? "dense|diagonal|both" : "dense|diagonal")
      ->check(allow_both ? CLI::IsMember({"dense", "diagonal", "both"})
                         : CLI::IsMember({"dense", "diagonal"}));
  cmd->add_option("--detection", f.detection, "ancilla|separate")
      ->check(CLI::IsMember({"ancilla", "separate"}));
  auto *eps = cmd->add_option("--epsilon", f.epsilon, "pseudo-pure baseline with fixed epsilon");
  auto *tp = cmd->add_option("--thermal-p", f.thermal_p,
                             "pseudo-pure baseline with epsilon(N) = N p / 2^N");
  eps->excludes(tp);
  cmd->add_option("--tolerance", f.tolerance, "signal classification threshold");
  cmd->add_option("--format", f.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", f.out, "write the report here instead of stdout");
  cmd->add_option("--max-dense-spins", f.capacity.dense_spins,
                  "dense capacity override (may exhaust memory)");
  cmd->add_option("--max-diagonal-spins", f.capacity.diagonal_spins,
                  "diagonal capacity override (may exhaust memory)");
}

std::optional<PseudoPureConfig> pseudo_pure_of(const CommonFlags &f) {
  try {
    if (f.epsilon) return PseudoPureConfig::fixed(*f.epsilon);
    if (f.thermal_p) return PseudoPureConfig::thermal(*f.thermal_p);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  return std::nullopt;
}

void emit(const Report &report, const CommonFlags &f) {
  for (const auto &w : report.warnings) std::cerr << "warning: " << w << '\n';
  std::string text = f.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) throw FileError("cannot write '" + f.out + "'");
  file << text;
  if (!file) throw FileError("failed writing '" + f.out + "'");
}

int exit_code(ExitCode c) { return static_cast<int>(c); }

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Deutsch-Jozsa by spin-ensemble computing: population-space solver, "
               "pseudo-pure and classical baselines"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::optional<std::size_t> run_n;
  std::string run_oracle;
  std::optional<std::uint64_t> run_seed;
  auto *run = app.add_subcommand("run", "single experiment");
  run->add_option("--n", run_n, "input arity");
  run->add_option("--oracle", run_oracle,
                  "constant0|constant1|balanced-random|random|file:<path>|bits:<01..>")
      ->required();
  run->add_option("--seed", run_seed, "seed for randomized oracles");
  add_common(run, run_flags, true);

  CommonFlags sweep_flags;
  std::string sweep_n = "6";
  std::size_t sweep_trials = 20;
  std::uint64_t sweep_seed = 0;
  auto *sweep = app.add_subcommand("sweep", "scaling table over an arity range");
  sweep->add_option("--n", sweep_n, "max arity, or an inclusive range lo..hi");
  sweep->add_option("--trials", sweep_trials, "random balanced tables per arity");
  sweep->add_option("--seed", sweep_seed, "seed for the balanced trials");
  add_common(sweep, sweep_flags, false);

  std::string oracle_spec;
  std::optional<std::size_t> oracle_n;
  std::optional<std::uint64_t> oracle_seed;
  auto *oracle = app.add_subcommand("oracle", "classify a table and show its permutation");
  oracle->add_option("source", oracle_spec, "table file or oracle spec")->required();
  oracle->add_option("--n", oracle_n, "arity for generator specs");
  oracle->add_option("--seed", oracle_seed, "seed for randomized specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_code(ExitCode::usage);
  }

  try {
    if (*run) {
      ExperimentConfig cfg;
      cfg.n = run_n;
      cfg.oracle = OracleSource::parse(run_oracle);
      cfg.seed = run_seed;
      cfg.backend = parse_backend_choice(run_flags.backend);
      cfg.detection = parse_detection(run_flags.detection);
      cfg.pseudo_pure = pseudo_pure_of(run_flags);
      cfg.tolerance = run_flags.tolerance;
      cfg.capacity = run_flags.capacity;
      emit(cmd_run(cfg), run_flags);
    } else if (*sweep) {
      SweepConfig cfg;
      std::tie(cfg.n_min, cfg.n_max) = parse_n_range(sweep_n);
      cfg.trials = sweep_trials;
      cfg.seed = sweep_seed;
      cfg.backend = sweep_flags.backend == "dense" ? Backend::dense : Backend::diagonal;
      cfg.detection = parse_detection(sweep_flags.detection);
      cfg.pseudo_pure = pseudo_pure_of(sweep_flags);
      cfg.tolerance = sweep_flags.tolerance;
      cfg.capacity = sweep_flags.capacity;
      emit(cmd_sweep(cfg), sweep_flags);
    } else if (*oracle) {
      std::cout << cmd_oracle(OracleSource::parse(oracle_spec), oracle_n, oracle_seed);
    }
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_code(ExitCode::usage);
  } catch (const FileError &e) {
    std::cerr << "file error: " << e.what() << '\n';
    return exit_code(ExitCode::file);
  } catch (const MalformedTableError &e) {
    std::cerr << "malformed truth table: " << e.what() << '\n';
    return exit_code(ExitCode::malformed_table);
  } catch (const CapacityError &e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return exit_code(ExitCode::capacity);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(ExitCode::usage);
  }
  return exit_code(ExitCode::ok);
}
