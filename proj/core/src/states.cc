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

#include "liouville/states.h"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace liouville {

namespace {

std::size_t spins_for_dim(std::size_t dim) {
  return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace

DensityOperator::DensityOperator(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0 ||
      !std::has_single_bit(static_cast<std::size_t>(entries_.rows()))) {
    throw std::invalid_argument("density matrix must be square with power-of-two dimension");
  }
  double deviation = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (deviation > kStateTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                std::to_string(deviation) + ")");
  }
}

DensityOperator DensityOperator::maximally_mixed(std::size_t n_spins) {
  auto dim = Eigen::Index{1} << n_spins;
  return DensityOperator(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

std::size_t DensityOperator::n_spins() const { return spins_for_dim(dim()); }

bool DensityOperator::is_normalized(double tol) const { return std::abs(trace() - 1.0) <= tol; }

double DensityOperator::max_coherence() const {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
    for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
      if (r != c) worst = std::max(worst, std::abs(entries_(r, c)));
    }
  }
  return worst;
}

DensityOperator operator+(const DensityOperator &a, const DensityOperator &b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("density matrix dimension mismatch");
  return DensityOperator(a.entries_ + b.entries_);
}

DensityOperator operator-(const DensityOperator &a, const DensityOperator &b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("density matrix dimension mismatch");
  return DensityOperator(a.entries_ - b.entries_);
}

DensityOperator operator*(double c, const DensityOperator &a) {
  return DensityOperator(c * a.entries_);
}

DiagonalState::DiagonalState(std::vector<double> populations)
    : populations_(std::move(populations)) {
  if (populations_.empty() || !std::has_single_bit(populations_.size())) {
    throw std::invalid_argument("population vector length must be a power of two");
  }
  for (double p : populations_) {
    if (!(p >= -kStateTolerance)) {
      throw std::invalid_argument("population " + std::to_string(p) + " is negative");
    }
  }
}

DiagonalState DiagonalState::uniform(std::size_t n_spins) {
  std::size_t dim = std::size_t{1} << n_spins;
  return DiagonalState(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

DiagonalState DiagonalState::basis(std::size_t n_spins, std::size_t index) {
  std::size_t dim = std::size_t{1} << n_spins;
  if (index >= dim) throw std::out_of_range("basis index outside register");
  std::vector<double> p(dim, 0.0);
  p[index] = 1.0;
  return DiagonalState(std::move(p));
}

std::size_t DiagonalState::n_spins() const { return spins_for_dim(dim()); }

double DiagonalState::total() const {
  return std::accumulate(populations_.begin(), populations_.end(), 0.0);
}

bool DiagonalState::is_normalized(double tol) const { return std::abs(total() - 1.0) <= tol; }

}  // namespace liouville
