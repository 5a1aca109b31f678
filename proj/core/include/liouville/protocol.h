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

#pragma once

// Deutsch-Jozsa protocols: the single-evaluation population-space solver, the
// pseudo-pure-state circuit baseline and the classical query baseline.

#include <cstddef>
#include <optional>
#include <span>

#include "liouville/oracle.h"
#include "liouville/spin_system.h"
#include "liouville/states.h"

namespace liouville {

// Constant is reported by protocols that detect constancy but not the value.
// PromiseViolated is reported by the classical solver on a table that is
// neither constant nor balanced.
enum class Verdict { Constant0, Constant1, Constant, Balanced, PromiseViolated };

const char *to_string(Verdict v);

inline constexpr double kDefaultSignalTolerance = 1e-6;

struct Outcome {
  double signal = 0.0;
  Verdict verdict = Verdict::Balanced;
  std::size_t evaluations = 0;
  std::optional<Backend> backend;  // empty for the classical solver
};

/// Pseudo-pure weight: either a fixed epsilon in (0, 1] or the thermal model
/// epsilon(N) = N p / 2^N.
class PseudoPureConfig {
 public:
  static PseudoPureConfig fixed(double epsilon);
  static PseudoPureConfig thermal(double polarization);

  double epsilon_for(std::size_t n_spins) const;
  bool is_thermal() const { return thermal_; }
  double parameter() const { return value_; }

 private:
  PseudoPureConfig(bool thermal, double value) : thermal_(thermal), value_(value) {}

  bool thermal_;
  double value_;
};

struct RunOptions {
  double tolerance = kDefaultSignalTolerance;
  Capacity capacity{};
};

/// Ancilla in alpha, inputs uniformly mixed, detection spin (if any) in
/// alpha, as a trace-1 population vector.
DiagonalState liouville_input_closed_form(const SpinSystem &system);

/// Fully polarized equilibrium, 90 degree x pulse on the inputs, crusher.
/// Stays in the population representation throughout.
DiagonalState prepare_liouville_input(const SpinSystem &system);

/// The same preparation carried out on the dense density matrix.
DiagonalState prepare_liouville_input_dense(const SpinSystem &system);

/// signal > tol -> Constant0, signal < -tol -> Constant1, else Balanced.
Verdict classify_signal(double signal, double tol = kDefaultSignalTolerance);

/// Single-evaluation solver. The signal is <2 I_rz> on the detection spin
/// after one application of the oracle; FANOUT copies I_0 onto I_r first when
/// the register has a separate detection spin. Throws std::invalid_argument
/// on arity mismatch and CapacityError when the register exceeds the backend.
Outcome run_liouville_dj(OracleBox &oracle, Backend backend, const RunOptions &options = {});
Outcome run_liouville_dj(const SpinSystem &system, const TruthTable &table, Backend backend,
                         const RunOptions &options = {});

/// (1 - epsilon) 2^-N 1 + epsilon |0..0><0..0| over the full register.
/// Accepts epsilon in [0, 1].
DensityOperator pseudo_pure_state(const SpinSystem &system, double epsilon);

/// Textbook circuit (ancilla flip, Hadamards, U_f, Hadamards on inputs) on the
/// pseudo-pure state. The signal is the all-inputs-alpha probability with the
/// identity component removed, so it equals epsilon for constant f and 0 for
/// balanced f. Dense backend only.
Outcome run_pseudo_pure_dj(OracleBox &oracle, const PseudoPureConfig &config,
                           const RunOptions &options = {});
Outcome run_pseudo_pure_dj(const SpinSystem &system, const TruthTable &table,
                           const PseudoPureConfig &config, const RunOptions &options = {});

/// epsilon(N) = N p / 2^N. Throws std::invalid_argument unless 0 < p <= 1
/// and N >= 1.
double thermal_epsilon(std::size_t n_spins, double polarization);

/// 2^(n-1) + 1.
std::size_t classical_worst_case(std::size_t n);

/// Deterministic classical solver: queries f in `order` and stops at the
/// first disagreement or after 2^(n-1) + 1 equal answers. `order` must be a
/// permutation of all 2^n inputs (std::invalid_argument otherwise). Tables
/// outside the promise yield Verdict::PromiseViolated with no queries.
Outcome classical_dj(const TruthTable &table, std::span<const std::size_t> order);
Outcome classical_dj(const TruthTable &table);

}  // namespace liouville
