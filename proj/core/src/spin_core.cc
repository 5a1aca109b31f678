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

#include "liouville/spin_core.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "liouville/errors.h"

namespace liouville {

namespace {

constexpr double kImaginaryTolerance = 1e-10;
constexpr double kEntropyCutoff = 1e-15;

void require_dense_capacity(const SpinSystem &system) {
  if (system.n_spins() > kMaxDenseSpins) {
    throw CapacityError("dense operators hold at most " + std::to_string(kMaxDenseSpins) +
                        " spins");
  }
}

void require_dim(std::size_t state_dim, std::size_t other_dim) {
  if (state_dim != other_dim) {
    throw std::invalid_argument("dimension mismatch: state " + std::to_string(state_dim) +
                                ", operator " + std::to_string(other_dim));
  }
}

double real_checked(std::complex<double> value) {
  if (std::abs(value.imag()) > kImaginaryTolerance) {
    throw std::invalid_argument("expectation has imaginary part " + std::to_string(value.imag()) +
                                "; observable is not Hermitian");
  }
  return value.real();
}

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd &m) { return 0.5 * (m + m.adjoint()); }

double entropy_of(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda > kEntropyCutoff) s -= lambda * std::log(lambda);
  }
  return s;
}

}  // namespace

Operator polarization_operator(const SpinSystem &system, SpinIndex k, Level level) {
  require_dense_capacity(system);
  const BasisIndex mask = system.mask_of(k);
  const BasisIndex wanted = level == Level::alpha ? 0 : mask;
  auto dim = static_cast<Eigen::Index>(system.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((static_cast<BasisIndex>(i) & mask) == wanted) m(i, i) = 1.0;
  }
  return Operator(std::move(m));
}

Operator pauli_z(const SpinSystem &system, SpinIndex k) {
  require_dense_capacity(system);
  auto diagonal = pauli_z_diagonal(system, k);
  Eigen::VectorXcd d(static_cast<Eigen::Index>(diagonal.size()));
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(static_cast<Eigen::Index>(i)) = diagonal[i];
  return Operator(d.asDiagonal().toDenseMatrix(), OperatorKind::unitary);
}

std::vector<double> pauli_z_diagonal(const SpinSystem &system, SpinIndex k) {
  const BasisIndex mask = system.mask_of(k);
  std::vector<double> d(system.dim());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = (static_cast<BasisIndex>(i) & mask) ? -1.0 : 1.0;
  }
  return d;
}

DensityOperator zeeman_product_state(const SpinSystem &system, std::string_view config) {
  require_dense_capacity(system);
  auto index = static_cast<Eigen::Index>(system.basis_index(config));
  auto dim = static_cast<Eigen::Index>(system.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityOperator(std::move(m));
}

DiagonalState zeeman_populations(const SpinSystem &system, std::string_view config) {
  return DiagonalState::basis(system.n_spins(), system.basis_index(config));
}

double expectation(const DensityOperator &state, const Operator &observable) {
  require_dim(state.dim(), observable.dim());
  // Tr(rho O) = sum_ij rho_ij O_ji
  std::complex<double> value =
      state.matrix().cwiseProduct(observable.matrix().transpose()).sum();
  return real_checked(value);
}

double expectation(const DiagonalState &state, const Operator &observable) {
  require_dim(state.dim(), observable.dim());
  std::complex<double> value{};
  for (std::size_t i = 0; i < state.dim(); ++i) {
    auto ii = static_cast<Eigen::Index>(i);
    value += state[i] * observable.matrix()(ii, ii);
  }
  return real_checked(value);
}

double expectation(const DensityOperator &state, std::span<const double> diagonal_observable) {
  require_dim(state.dim(), diagonal_observable.size());
  std::complex<double> value{};
  for (std::size_t i = 0; i < state.dim(); ++i) {
    auto ii = static_cast<Eigen::Index>(i);
    value += state.matrix()(ii, ii) * diagonal_observable[i];
  }
  return real_checked(value);
}

double expectation(const DiagonalState &state, std::span<const double> diagonal_observable) {
  require_dim(state.dim(), diagonal_observable.size());
  double value = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) value += state[i] * diagonal_observable[i];
  return value;
}

DensityOperator conjugate(const DensityOperator &state, const Operator &unitary) {
  require_dim(state.dim(), unitary.dim());
  if (unitary.kind() == OperatorKind::general && !is_unitary(unitary.matrix())) {
    throw std::invalid_argument("conjugation requires a unitary operator");
  }
  const auto &u = unitary.matrix();
  return DensityOperator(hermitian_part(u * state.matrix() * u.adjoint()));
}

DiagonalState conjugate(const DiagonalState &state, const Operator &unitary) {
  require_dim(state.dim(), unitary.dim());
  auto perm = PermutationUnitary::from_operator(unitary);
  if (!perm) {
    throw std::invalid_argument("diagonal states can only be conjugated by permutations");
  }
  return conjugate(state, *perm);
}

DensityOperator conjugate(const DensityOperator &state, const PermutationUnitary &perm) {
  require_dim(state.dim(), perm.dim());
  const auto &rho = state.matrix();
  auto dim = static_cast<Eigen::Index>(state.dim());
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    auto pc = static_cast<Eigen::Index>(perm.image(static_cast<BasisIndex>(c)));
    for (Eigen::Index r = 0; r < dim; ++r) {
      out(static_cast<Eigen::Index>(perm.image(static_cast<BasisIndex>(r))), pc) = rho(r, c);
    }
  }
  return DensityOperator(std::move(out));
}

DiagonalState conjugate(const DiagonalState &state, const PermutationUnitary &perm) {
  require_dim(state.dim(), perm.dim());
  std::vector<double> out(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    out[perm.image(static_cast<BasisIndex>(i))] = state[i];
  }
  return DiagonalState(std::move(out));
}

DensityOperator conjugate_local(const DensityOperator &state, const SpinSystem &system,
                                SpinIndex k, const Eigen::Matrix2cd &unitary) {
  require_dim(state.dim(), system.dim());
  if (!is_unitary(unitary)) {
    throw std::invalid_argument("conjugation requires a unitary operator");
  }
  const auto mask = static_cast<Eigen::Index>(system.mask_of(k));
  const auto dim = static_cast<Eigen::Index>(state.dim());
  Eigen::MatrixXcd m = state.matrix();

  // Left multiply by U on the rows of each (alpha, beta) pair.
  for (Eigen::Index c = 0; c < dim; ++c) {
    auto col = m.col(c);
    for (Eigen::Index r0 = 0; r0 < dim; ++r0) {
      if (r0 & mask) continue;
      const Eigen::Index r1 = r0 | mask;
      const std::complex<double> a = col(r0), b = col(r1);
      col(r0) = unitary(0, 0) * a + unitary(0, 1) * b;
      col(r1) = unitary(1, 0) * a + unitary(1, 1) * b;
    }
  }
  // Right multiply by U^dagger on the columns.
  for (Eigen::Index c0 = 0; c0 < dim; ++c0) {
    if (c0 & mask) continue;
    const Eigen::Index c1 = c0 | mask;
    Eigen::VectorXcd a = m.col(c0);
    Eigen::VectorXcd b = m.col(c1);
    m.col(c0) = std::conj(unitary(0, 0)) * a + std::conj(unitary(0, 1)) * b;
    m.col(c1) = std::conj(unitary(1, 0)) * a + std::conj(unitary(1, 1)) * b;
  }
  return DensityOperator(hermitian_part(m));
}

DensityOperator to_dense(const DiagonalState &state) {
  if (state.n_spins() > kMaxDenseSpins) {
    throw CapacityError("dense operators hold at most " + std::to_string(kMaxDenseSpins) +
                        " spins");
  }
  auto dim = static_cast<Eigen::Index>(state.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) m(i, i) = state[static_cast<std::size_t>(i)];
  return DensityOperator(std::move(m));
}

DiagonalState to_diagonal(const DensityOperator &state) {
  double coherence = state.max_coherence();
  if (coherence >= kCoherenceTolerance) {
    throw std::invalid_argument("state carries coherences of modulus " +
                                std::to_string(coherence));
  }
  std::vector<double> p(state.dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto ii = static_cast<Eigen::Index>(i);
    p[i] = state.matrix()(ii, ii).real();
  }
  return DiagonalState(std::move(p));
}

double von_neumann_entropy(const DensityOperator &state) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(state.matrix(),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigensolver did not converge");
  }
  const Eigen::VectorXd &lambda = solver.eigenvalues();
  return entropy_of(std::span<const double>(lambda.data(), static_cast<std::size_t>(lambda.size())));
}

double von_neumann_entropy(const DiagonalState &state) { return entropy_of(state.populations()); }

}  // namespace liouville
