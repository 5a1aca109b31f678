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

// Operator and state algebra over the Zeeman basis.

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "liouville/operator.h"
#include "liouville/spin_system.h"
#include "liouville/states.h"

namespace liouville {

enum class Level { alpha, beta };

/// 1 (x) ... (x) I_k^level (x) ... (x) 1. Entries are exactly 0 or 1.
Operator polarization_operator(const SpinSystem &system, SpinIndex k, Level level);

/// 2 I_kz embedded in the register (Pauli z on spin k).
Operator pauli_z(const SpinSystem &system, SpinIndex k);

/// Diagonal of pauli_z(system, k), without materializing the matrix.
std::vector<double> pauli_z_diagonal(const SpinSystem &system, SpinIndex k);

/// Projector onto the configuration `config` ('0' = alpha), spin 0 first.
DensityOperator zeeman_product_state(const SpinSystem &system, std::string_view config);
DiagonalState zeeman_populations(const SpinSystem &system, std::string_view config);

// Tr(rho O). Throws std::invalid_argument on dimension mismatch or when the
// imaginary part of the trace exceeds 1e-10 (non-Hermitian observable).
double expectation(const DensityOperator &state, const Operator &observable);
double expectation(const DiagonalState &state, const Operator &observable);

// Same for an observable given by its diagonal.
double expectation(const DensityOperator &state, std::span<const double> diagonal_observable);
double expectation(const DiagonalState &state, std::span<const double> diagonal_observable);

/// U rho U^dagger. Throws std::invalid_argument for a non-unitary U or a
/// dimension mismatch.
DensityOperator conjugate(const DensityOperator &state, const Operator &unitary);
/// Permutes populations. Throws std::invalid_argument unless U is
/// permutation-structured.
DiagonalState conjugate(const DiagonalState &state, const Operator &unitary);

DensityOperator conjugate(const DensityOperator &state, const PermutationUnitary &perm);
DiagonalState conjugate(const DiagonalState &state, const PermutationUnitary &perm);

/// Conjugation by a single-spin unitary acting on spin k, in O(dim^2).
DensityOperator conjugate_local(const DensityOperator &state, const SpinSystem &system, SpinIndex k,
                                const Eigen::Matrix2cd &unitary);

DensityOperator to_dense(const DiagonalState &state);

inline constexpr double kCoherenceTolerance = 1e-10;

/// Throws std::invalid_argument when any off-diagonal modulus reaches 1e-10.
DiagonalState to_diagonal(const DensityOperator &state);

/// -sum lambda ln lambda in nats; eigenvalues at or below 1e-15 contribute 0.
double von_neumann_entropy(const DensityOperator &state);
double von_neumann_entropy(const DiagonalState &state);

}  // namespace liouville
