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
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "liouville/spin_system.h"

namespace liouville {

inline constexpr double kOperatorTolerance = 1e-12;

enum class OperatorKind { general, unitary, permutation };

/// Dense complex operator on the Zeeman basis, tagged with the structural
/// property it is guaranteed to satisfy.
class Operator {
 public:
  /// Validates that `entries` is square with power-of-two dimension and that
  /// it satisfies `kind` within kOperatorTolerance; throws
  /// std::invalid_argument otherwise.
  explicit Operator(Eigen::MatrixXcd entries, OperatorKind kind = OperatorKind::general);

  static Operator identity(std::size_t dim);

  const Eigen::MatrixXcd &matrix() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  OperatorKind kind() const { return kind_; }

  /// Max elementwise |O - O^dagger| <= tol.
  bool is_hermitian(double tol = kOperatorTolerance) const;
  /// True when every off-diagonal entry is exactly zero.
  bool is_diagonal() const;

  friend Operator operator+(const Operator &a, const Operator &b);
  friend Operator operator-(const Operator &a, const Operator &b);
  friend Operator operator*(const Operator &a, const Operator &b);
  friend Operator operator*(std::complex<double> c, const Operator &a);

 private:
  Eigen::MatrixXcd entries_;
  OperatorKind kind_;
};

bool is_unitary(const Eigen::MatrixXcd &m, double tol = kOperatorTolerance);
bool is_permutation_matrix(const Eigen::MatrixXcd &m, double tol = kOperatorTolerance);

/// Kronecker product a (x) b, with `a` acting on the more significant bits.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Permutation of Zeeman basis states: maps |i> to |image(i)>.
class PermutationUnitary {
 public:
  /// Throws std::invalid_argument unless `mapping` is a bijection on
  /// {0..size-1} with power-of-two size.
  explicit PermutationUnitary(std::vector<BasisIndex> mapping);

  static PermutationUnitary identity(std::size_t dim);

  /// Extracts the basis permutation of an operator whose every row and column
  /// holds exactly one unit-modulus entry. Phases are dropped. Returns nullopt
  /// for any other operator.
  static std::optional<PermutationUnitary> from_operator(const Operator &op,
                                                         double tol = kOperatorTolerance);

  std::size_t dim() const { return mapping_.size(); }
  BasisIndex image(BasisIndex i) const { return mapping_[i]; }
  std::span<const BasisIndex> mapping() const { return mapping_; }

  /// this applied after `first`.
  PermutationUnitary after(const PermutationUnitary &first) const;
  PermutationUnitary inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  /// Matrix with a single 1 at (image(i), i) for every i.
  Operator to_operator() const;

  friend bool operator==(const PermutationUnitary &, const PermutationUnitary &) = default;

 private:
  std::vector<BasisIndex> mapping_;
};

}  // namespace liouville
