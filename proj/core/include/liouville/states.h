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

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace liouville {

inline constexpr double kStateTolerance = 1e-12;

/// Hermitian density matrix over the 2^N Zeeman basis.
///
/// Construction checks Hermiticity only. Real-weighted sums and scalings are
/// permitted, so intermediate values need not have unit trace; protocol
/// boundaries call is_normalized().
class DensityOperator {
 public:
  explicit DensityOperator(Eigen::MatrixXcd entries);

  static DensityOperator maximally_mixed(std::size_t n_spins);

  const Eigen::MatrixXcd &matrix() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t n_spins() const;
  double trace() const { return entries_.trace().real(); }

  bool is_normalized(double tol = kStateTolerance) const;
  /// Largest modulus among off-diagonal entries.
  double max_coherence() const;

  friend DensityOperator operator+(const DensityOperator &a, const DensityOperator &b);
  friend DensityOperator operator-(const DensityOperator &a, const DensityOperator &b);
  friend DensityOperator operator*(double c, const DensityOperator &a);

 private:
  Eigen::MatrixXcd entries_;
};

/// Population vector of a state with no coherences in the Zeeman basis.
class DiagonalState {
 public:
  /// Throws std::invalid_argument on non power-of-two length or an entry
  /// below -kStateTolerance.
  explicit DiagonalState(std::vector<double> populations);

  static DiagonalState uniform(std::size_t n_spins);
  static DiagonalState basis(std::size_t n_spins, std::size_t index);

  std::span<const double> populations() const { return populations_; }
  double operator[](std::size_t i) const { return populations_[i]; }
  std::size_t dim() const { return populations_.size(); }
  std::size_t n_spins() const;
  double total() const;

  bool is_normalized(double tol = kStateTolerance) const;

  friend bool operator==(const DiagonalState &, const DiagonalState &) = default;

 private:
  std::vector<double> populations_;
};

}  // namespace liouville
