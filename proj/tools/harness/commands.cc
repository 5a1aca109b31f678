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

#include "harness/commands.h"

#include <chrono>
#include <cmath>
#include <future>
#include <sstream>

#include "liouville/oracle.h"
#include "liouville/protocol.h"

namespace liouville::harness {

namespace {

constexpr std::size_t kPermutationPrintLimit = 4;

template <typename Fn>
auto timed(Fn &&fn, double &wall_ms) {
  auto start = std::chrono::steady_clock::now();
  auto result = fn();
  wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
  return result;
}

RunRecord make_record(const char *protocol, const TruthTable &table, const Outcome &outcome,
                      double wall_ms) {
  RunRecord r;
  r.protocol = protocol;
  r.n = table.arity();
  r.oracle_class = to_string(classify(table));
  r.signal = outcome.signal;
  r.verdict = to_string(outcome.verdict);
  r.evaluations = outcome.evaluations;
  r.backend = outcome.backend ? to_string(*outcome.backend) : "none";
  r.wall_ms = wall_ms;
  return r;
}

void note_raised_capacity(const Capacity &capacity, std::vector<std::string> &warnings) {
  const Capacity defaults{};
  if (capacity.dense_spins > defaults.dense_spins ||
      capacity.diagonal_spins > defaults.diagonal_spins) {
    warnings.emplace_back("capacity raised above the defaults; runs may exhaust memory");
  }
}

std::string basis_label(BasisIndex b, std::size_t n_spins) {
  std::string s(n_spins, '0');
  for (std::size_t k = 0; k < n_spins; ++k) {
    if (b & (BasisIndex{1} << (n_spins - 1 - k))) s[k] = '1';
  }
  return "|" + s + ">";
}

TruthTable constant_zero(std::size_t n) {
  return TruthTable(std::vector<std::uint8_t>(std::size_t{1} << n, 0));
}

SweepRow sweep_one(const SweepConfig &config, std::size_t n) {
  const SpinSystem system(n, config.detection == Detection::separate);
  const RunOptions options{config.tolerance, config.capacity};
  const TruthTable constant = constant_zero(n);

  SweepRow row;
  row.n = n;
  row.liouville_signal = run_liouville_dj(system, constant, config.backend, options).signal;

  double total = 0.0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    TruthTable balanced = random_balanced(n, mix_seed(config.seed, n, t));
    total += std::abs(run_liouville_dj(system, balanced, config.backend, options).signal);
  }
  row.balanced_mean_abs_signal = config.trials ? total / static_cast<double>(config.trials) : 0.0;

  if (config.pseudo_pure) {
    double pp = run_pseudo_pure_dj(system, constant, *config.pseudo_pure, options).signal;
    row.pseudo_pure_signal = pp;
    if (pp != 0.0) row.ratio = row.liouville_signal / pp;
  }
  row.classical_worst_case = classical_dj(constant).evaluations;
  return row;
}

}  // namespace

Report cmd_run(const ExperimentConfig &config) {
  config.validate();
  const TruthTable table = resolve_table(config.oracle, config.n, config.seed);
  if (config.n && *config.n != table.arity()) {
    throw UsageError("--n " + std::to_string(*config.n) + " does not match table arity " +
                     std::to_string(table.arity()));
  }
  const SpinSystem system(table.arity(), config.detection == Detection::separate);
  const RunOptions options{config.tolerance, config.capacity};

  Report report;
  report.command = "run";
  report.table = table.to_string();
  note_raised_capacity(config.capacity, report.warnings);
  if (classify(table) == OracleClass::Neither) {
    report.warnings.emplace_back(
        "table is neither constant nor balanced; the Deutsch-Jozsa promise is violated");
  }

  std::vector<Backend> backends;
  if (config.backend != BackendChoice::diagonal) backends.push_back(Backend::dense);
  if (config.backend != BackendChoice::dense) backends.push_back(Backend::diagonal);
  for (Backend b : backends) system.require_capacity(b, config.capacity);
  if (config.pseudo_pure) system.require_capacity(Backend::dense, config.capacity);

  for (Backend b : backends) {
    double ms = 0.0;
    Outcome out = timed([&] { return run_liouville_dj(system, table, b, options); }, ms);
    report.records.push_back(make_record("liouville", table, out, ms));
  }
  if (config.backend == BackendChoice::both) {
    report.cross_check = std::abs(report.records[0].signal - report.records[1].signal);
  }
  if (config.pseudo_pure) {
    double ms = 0.0;
    Outcome out =
        timed([&] { return run_pseudo_pure_dj(system, table, *config.pseudo_pure, options); }, ms);
    report.records.push_back(make_record("pseudo-pure", table, out, ms));
  }
  double ms = 0.0;
  Outcome classical = timed([&] { return classical_dj(table); }, ms);
  report.records.push_back(make_record("classical", table, classical, ms));
  return report;
}

Report cmd_sweep(const SweepConfig &config) {
  config.validate();
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    const SpinSystem system(n, config.detection == Detection::separate);
    system.require_capacity(config.backend, config.capacity);
    if (config.pseudo_pure) system.require_capacity(Backend::dense, config.capacity);
  }

  std::vector<std::future<SweepRow>> tasks;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    tasks.push_back(std::async(std::launch::async, sweep_one, std::cref(config), n));
  }

  Report report;
  report.command = "sweep";
  note_raised_capacity(config.capacity, report.warnings);
  for (auto &task : tasks) report.sweep.push_back(task.get());
  return report;
}

std::string cmd_oracle(const OracleSource &source, std::optional<std::size_t> n,
                       std::optional<std::uint64_t> seed) {
  const TruthTable table = resolve_table(source, n, seed);
  if (n && *n != table.arity()) {
    throw UsageError("--n " + std::to_string(*n) + " does not match table arity " +
                     std::to_string(table.arity()));
  }
  const OracleClass cls = classify(table);

  std::ostringstream out;
  out << "n=" << table.arity() << ", " << to_string(cls) << ", ones=" << table.ones() << '\n';
  out << "table: " << table.to_string() << '\n';
  if (cls == OracleClass::Neither) {
    out << "warning: table is neither constant nor balanced; the Deutsch-Jozsa promise is "
           "violated\n";
  }
  if (table.arity() <= kPermutationPrintLimit) {
    const SpinSystem system(table.arity());
    const PermutationUnitary perm = reversible_oracle(system, table);
    out << "permutation (I_0 first" << (perm.is_identity() ? ", identity" : "") << "):\n";
    for (std::size_t b = 0; b < perm.dim(); ++b) {
      out << "  " << basis_label(static_cast<BasisIndex>(b), system.n_spins()) << " -> "
          << basis_label(perm.image(static_cast<BasisIndex>(b)), system.n_spins()) << '\n';
    }
  }
  return out.str();
}

}  // namespace liouville::harness
