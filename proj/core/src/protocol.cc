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

#include "liouville/protocol.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "liouville/errors.h"
#include "liouville/pulses.h"
#include "liouville/spin_core.h"

namespace liouville {

namespace {

PulseSpec preparation_pulse(const SpinSystem &system) {
  PulseSpec spec{Axis::x, M_PI / 2.0, {}};
  for (std::size_t i = 1; i <= system.n_inputs(); ++i) spec.targets.push_back(system.input(i));
  return spec;
}

void require_probability(double value, const char *what) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in (0, 1], got " +
                                std::to_string(value));
  }
}

// Diagonal of the projector onto "every input spin in alpha".
std::vector<double> inputs_alpha_projector(const SpinSystem &system) {
  BasisIndex inputs = 0;
  for (std::size_t i = 1; i <= system.n_inputs(); ++i) inputs |= system.mask_of(system.input(i));
  std::vector<double> d(system.dim());
  for (std::size_t b = 0; b < d.size(); ++b) {
    d[b] = (static_cast<BasisIndex>(b) & inputs) == 0 ? 1.0 : 0.0;
  }
  return d;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd h;
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

Eigen::Matrix2cd not_gate() {
  Eigen::Matrix2cd x;
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

}  // namespace

const char *to_string(Verdict v) {
  switch (v) {
    case Verdict::Constant0:
      return "Constant0";
    case Verdict::Constant1:
      return "Constant1";
    case Verdict::Constant:
      return "Constant";
    case Verdict::Balanced:
      return "Balanced";
    case Verdict::PromiseViolated:
      return "PromiseViolated";
  }
  return "?";
}

PseudoPureConfig PseudoPureConfig::fixed(double epsilon) {
  require_probability(epsilon, "epsilon");
  return PseudoPureConfig(false, epsilon);
}

PseudoPureConfig PseudoPureConfig::thermal(double polarization) {
  require_probability(polarization, "polarization");
  return PseudoPureConfig(true, polarization);
}

double PseudoPureConfig::epsilon_for(std::size_t n_spins) const {
  return thermal_ ? thermal_epsilon(n_spins, value_) : value_;
}

DiagonalState liouville_input_closed_form(const SpinSystem &system) {
  const BasisIndex pinned = system.mask_of(system.ancilla()) |
                            (system.has_detection_spin() ? system.mask_of(system.detection()) : 0);
  const double weight = std::ldexp(1.0, -static_cast<int>(system.n_inputs()));
  std::vector<double> p(system.dim(), 0.0);
  for (std::size_t b = 0; b < p.size(); ++b) {
    if ((static_cast<BasisIndex>(b) & pinned) == 0) p[b] = weight;
  }
  return DiagonalState(std::move(p));
}

DiagonalState prepare_liouville_input(const SpinSystem &system) {
  DiagonalState equilibrium = DiagonalState::basis(system.n_spins(), 0);
  return apply_pulse_crushed(equilibrium, system, preparation_pulse(system));
}

DiagonalState prepare_liouville_input_dense(const SpinSystem &system) {
  DensityOperator equilibrium =
      zeeman_product_state(system, std::string(system.n_spins(), '0'));
  return crusher(apply_pulse(equilibrium, system, preparation_pulse(system)));
}

Verdict classify_signal(double signal, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (signal > tol) return Verdict::Constant0;
  if (signal < -tol) return Verdict::Constant1;
  return Verdict::Balanced;
}

Outcome run_liouville_dj(OracleBox &oracle, Backend backend, const RunOptions &options) {
  const SpinSystem &system = oracle.system();
  system.require_capacity(backend, options.capacity);
  const std::size_t calls_before = oracle.calls();
  const std::vector<double> readout = pauli_z_diagonal(system, system.detection());

  double signal = 0.0;
  if (backend == Backend::diagonal) {
    DiagonalState state = oracle.apply(prepare_liouville_input(system));
    if (system.has_detection_spin()) {
      state = conjugate(state, fanout_unitary(system, system.ancilla(), system.detection()));
    }
    signal = expectation(state, readout) / state.total();
  } else {
    DensityOperator state = oracle.apply(to_dense(prepare_liouville_input_dense(system)));
    if (system.has_detection_spin()) {
      state = conjugate(state, fanout_unitary(system, system.ancilla(), system.detection()));
    }
    signal = expectation(state, readout) / state.trace();
  }

  Outcome out;
  out.signal = signal;
  out.verdict = classify_signal(signal, options.tolerance);
  out.evaluations = oracle.calls() - calls_before;
  out.backend = backend;
  return out;
}

Outcome run_liouville_dj(const SpinSystem &system, const TruthTable &table, Backend backend,
                         const RunOptions &options) {
  system.require_capacity(backend, options.capacity);
  OracleBox oracle(system, table);
  return run_liouville_dj(oracle, backend, options);
}

DensityOperator pseudo_pure_state(const SpinSystem &system, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1], got " + std::to_string(epsilon));
  }
  if (system.n_spins() > kMaxDenseSpins) {
    throw CapacityError("pseudo-pure states are dense; register exceeds " +
                        std::to_string(kMaxDenseSpins) + " spins");
  }
  const auto dim = static_cast<Eigen::Index>(system.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) *
                       ((1.0 - epsilon) / static_cast<double>(dim));
  m(0, 0) += epsilon;
  return DensityOperator(std::move(m));
}

Outcome run_pseudo_pure_dj(OracleBox &oracle, const PseudoPureConfig &config,
                           const RunOptions &options) {
  const SpinSystem &system = oracle.system();
  system.require_capacity(Backend::dense, options.capacity);
  const std::size_t calls_before = oracle.calls();
  const double epsilon = config.epsilon_for(system.n_spins());

  DensityOperator rho = pseudo_pure_state(system, epsilon);
  const Eigen::Matrix2cd h = hadamard();
  rho = conjugate_local(rho, system, system.ancilla(), not_gate());
  rho = conjugate_local(rho, system, system.ancilla(), h);
  for (std::size_t i = 1; i <= system.n_inputs(); ++i) {
    rho = conjugate_local(rho, system, system.input(i), h);
  }
  rho = oracle.apply(rho);
  for (std::size_t i = 1; i <= system.n_inputs(); ++i) {
    rho = conjugate_local(rho, system, system.input(i), h);
  }

  const std::vector<double> projector = inputs_alpha_projector(system);
  const double measured = expectation(rho, projector);
  // The identity component is invariant under the circuit; remove its share.
  const double identity_share =
      expectation(DensityOperator::maximally_mixed(system.n_spins()), projector);
  const double signal = measured - (1.0 - epsilon) * identity_share;

  Outcome out;
  out.signal = signal;
  out.verdict = signal > options.tolerance ? Verdict::Constant : Verdict::Balanced;
  out.evaluations = oracle.calls() - calls_before;
  out.backend = Backend::dense;
  return out;
}

Outcome run_pseudo_pure_dj(const SpinSystem &system, const TruthTable &table,
                           const PseudoPureConfig &config, const RunOptions &options) {
  system.require_capacity(Backend::dense, options.capacity);
  OracleBox oracle(system, table);
  return run_pseudo_pure_dj(oracle, config, options);
}

double thermal_epsilon(std::size_t n_spins, double polarization) {
  if (n_spins == 0) throw std::invalid_argument("thermal_epsilon needs at least one spin");
  require_probability(polarization, "polarization");
  return static_cast<double>(n_spins) * polarization *
         std::ldexp(1.0, -static_cast<int>(n_spins));
}

std::size_t classical_worst_case(std::size_t n) { return (std::size_t{1} << (n - 1)) + 1; }

Outcome classical_dj(const TruthTable &table, std::span<const std::size_t> order) {
  if (order.size() != table.size()) {
    throw std::invalid_argument("query order must list all " + std::to_string(table.size()) +
                                " inputs");
  }
  std::vector<bool> seen(table.size(), false);
  for (std::size_t x : order) {
    if (x >= table.size() || seen[x]) {
      throw std::invalid_argument("query order is not a permutation of the inputs");
    }
    seen[x] = true;
  }

  Outcome out;
  const OracleClass cls = classify(table);
  if (cls == OracleClass::Neither) {
    out.verdict = Verdict::PromiseViolated;
    return out;
  }

  const std::size_t limit = classical_worst_case(table.arity());
  const bool first = table(order[0]);
  out.evaluations = 1;
  for (std::size_t q = 1; q < limit; ++q) {
    ++out.evaluations;
    if (table(order[q]) != first) {
      out.verdict = Verdict::Balanced;
      out.signal = 0.0;
      return out;
    }
  }
  out.verdict = first ? Verdict::Constant1 : Verdict::Constant0;
  out.signal = first ? -1.0 : 1.0;
  return out;
}

Outcome classical_dj(const TruthTable &table) {
  std::vector<std::size_t> order(table.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return classical_dj(table, order);
}

}  // namespace liouville
