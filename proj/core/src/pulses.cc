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

#include "liouville/pulses.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "liouville/errors.h"
#include "liouville/spin_core.h"

namespace liouville {

void PulseSpec::validate(const SpinSystem &system) const {
  if (targets.empty()) throw std::invalid_argument("pulse needs at least one target spin");
  if (!std::isfinite(angle)) throw std::invalid_argument("pulse angle must be finite");
  for (SpinIndex k : targets) system.require_spin(k);
}

Eigen::Matrix2cd single_spin_rotation(Axis axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const std::complex<double> i{0.0, 1.0};
  Eigen::Matrix2cd r;
  if (axis == Axis::x) {
    r << c, -i * s, -i * s, c;
  } else {
    r << c, -s, s, c;
  }
  return r;
}

Operator rotation_unitary(const SpinSystem &system, const PulseSpec &spec) {
  spec.validate(system);
  if (system.n_spins() > kMaxDenseSpins) {
    throw CapacityError("rotation unitaries are dense; register exceeds " +
                        std::to_string(kMaxDenseSpins) + " spins");
  }
  std::vector<bool> hit(system.n_spins(), false);
  for (SpinIndex k : spec.targets) hit[k] = true;

  const Eigen::MatrixXcd rotation = single_spin_rotation(spec.axis, spec.angle);
  const Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1, 1);
  for (SpinIndex k = 0; k < system.n_spins(); ++k) {
    u = kron(u, hit[k] ? rotation : one);
  }
  return Operator(std::move(u), OperatorKind::unitary);
}

DensityOperator apply_pulse(const DensityOperator &state, const SpinSystem &system,
                            const PulseSpec &spec) {
  spec.validate(system);
  const Eigen::Matrix2cd rotation = single_spin_rotation(spec.axis, spec.angle);
  DensityOperator out = state;
  for (SpinIndex k : spec.targets) out = conjugate_local(out, system, k, rotation);
  return out;
}

DiagonalState apply_pulse_crushed(const DiagonalState &state, const SpinSystem &system,
                                  const PulseSpec &spec) {
  spec.validate(system);
  if (state.dim() != system.dim()) throw std::invalid_argument("state does not match register");
  // |R_ij|^2 for a single-spin rotation is the same for x and y axes.
  const double stay = std::pow(std::cos(spec.angle / 2.0), 2);
  const double flip = std::pow(std::sin(spec.angle / 2.0), 2);
  std::vector<double> p(state.populations().begin(), state.populations().end());
  for (SpinIndex k : spec.targets) {
    const BasisIndex mask = system.mask_of(k);
    for (std::size_t i0 = 0; i0 < p.size(); ++i0) {
      if (i0 & mask) continue;
      const std::size_t i1 = i0 | mask;
      const double a = p[i0];
      const double b = p[i1];
      p[i0] = stay * a + flip * b;
      p[i1] = flip * a + stay * b;
    }
  }
  return DiagonalState(std::move(p));
}

DiagonalState crusher(const DensityOperator &state) {
  std::vector<double> p(state.dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto ii = static_cast<Eigen::Index>(i);
    p[i] = state.matrix()(ii, ii).real();
  }
  return DiagonalState(std::move(p));
}

PermutationUnitary fanout_unitary(const SpinSystem &system, SpinIndex control, SpinIndex target) {
  if (control == target) throw std::invalid_argument("FANOUT control and target must differ");
  const BasisIndex c = system.mask_of(control);
  const BasisIndex t = system.mask_of(target);
  std::vector<BasisIndex> mapping(system.dim());
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    auto b = static_cast<BasisIndex>(i);
    mapping[i] = (b & c) ? (b ^ t) : b;
  }
  return PermutationUnitary(std::move(mapping));
}

PermutationUnitary inversion_unitary(const SpinSystem &system, SpinIndex target) {
  const BasisIndex t = system.mask_of(target);
  std::vector<BasisIndex> mapping(system.dim());
  for (std::size_t i = 0; i < mapping.size(); ++i) mapping[i] = static_cast<BasisIndex>(i) ^ t;
  return PermutationUnitary(std::move(mapping));
}

}  // namespace liouville
