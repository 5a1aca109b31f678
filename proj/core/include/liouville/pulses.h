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

#include <vector>

#include <Eigen/Dense>

#include "liouville/operator.h"
#include "liouville/spin_system.h"
#include "liouville/states.h"

namespace liouville {

enum class Axis { x, y };

/// An ideal hard pulse: rotation by `angle` radians about `axis` on every
/// spin in `targets`.
struct PulseSpec {
  Axis axis = Axis::x;
  double angle = 0.0;
  std::vector<SpinIndex> targets;

  /// Throws std::invalid_argument for empty targets or a non-finite angle,
  /// std::out_of_range for a target outside the register.
  void validate(const SpinSystem &system) const;
};

/// exp(-i angle I_axis) for a single spin.
Eigen::Matrix2cd single_spin_rotation(Axis axis, double angle);

/// Full-register rotation unitary. Dense; subject to the dense spin limit.
Operator rotation_unitary(const SpinSystem &system, const PulseSpec &spec);

/// rho -> R rho R^dagger applied spin by spin.
DensityOperator apply_pulse(const DensityOperator &state, const SpinSystem &system,
                            const PulseSpec &spec);

/// Diagonal of R rho R^dagger for a coherence-free rho: the pulse followed by
/// the crusher, computed without leaving the population representation.
DiagonalState apply_pulse_crushed(const DiagonalState &state, const SpinSystem &system,
                                  const PulseSpec &spec);

/// Gradient crusher modelled as projection onto the Zeeman diagonal.
DiagonalState crusher(const DensityOperator &state);

/// CNOT-style copy |..c..t..> -> |..c..(t xor c)..>. Throws
/// std::invalid_argument when control == target.
PermutationUnitary fanout_unitary(const SpinSystem &system, SpinIndex control, SpinIndex target);

/// Pi pulse on `target` as the alpha/beta swap, global phase dropped.
PermutationUnitary inversion_unitary(const SpinSystem &system, SpinIndex target);

}  // namespace liouville
