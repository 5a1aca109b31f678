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

#include "liouville/operator.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace liouville {

namespace {

void require_square_power_of_two(const Eigen::MatrixXcd &m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("operator matrix must be square");
  }
  if (m.rows() == 0 || !std::has_single_bit(static_cast<std::size_t>(m.rows()))) {
    throw std::invalid_argument("operator dimension must be a power of two");
  }
}

void require_same_dim(const Operator &a, const Operator &b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("operator dimension mismatch");
  }
}

}  // namespace

bool is_unitary(const Eigen::MatrixXcd &m, double tol) {
  if (m.rows() != m.cols()) return false;
  Eigen::MatrixXcd product = m * m.adjoint();
  product -= Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return product.cwiseAbs().maxCoeff() <= tol;
}

bool is_permutation_matrix(const Eigen::MatrixXcd &m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Eigen::Index n = m.rows();
  std::vector<int> column_hits(static_cast<std::size_t>(n), 0);
  for (Eigen::Index r = 0; r < n; ++r) {
    int row_hits = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
      double modulus = std::abs(m(r, c));
      if (std::abs(modulus - 1.0) <= tol) {
        ++row_hits;
        ++column_hits[static_cast<std::size_t>(c)];
      } else if (modulus > tol) {
        return false;
      }
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(column_hits.begin(), column_hits.end(), [](int h) { return h == 1; });
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator::Operator(Eigen::MatrixXcd entries, OperatorKind kind)
    : entries_(std::move(entries)), kind_(kind) {
  require_square_power_of_two(entries_);
  if (kind_ == OperatorKind::unitary && !is_unitary(entries_)) {
    throw std::invalid_argument("operator tagged unitary is not unitary");
  }
  if (kind_ == OperatorKind::permutation && !is_permutation_matrix(entries_)) {
    throw std::invalid_argument("operator tagged permutation is not a permutation");
  }
}

Operator Operator::identity(std::size_t dim) {
  auto n = static_cast<Eigen::Index>(dim);
  return Operator(Eigen::MatrixXcd::Identity(n, n), OperatorKind::permutation);
}

bool Operator::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_diagonal() const {
  for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
    for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
      if (r != c && entries_(r, c) != std::complex<double>{}) return false;
    }
  }
  return true;
}

Operator operator+(const Operator &a, const Operator &b) {
  require_same_dim(a, b);
  return Operator(a.entries_ + b.entries_);
}

Operator operator-(const Operator &a, const Operator &b) {
  require_same_dim(a, b);
  return Operator(a.entries_ - b.entries_);
}

Operator operator*(const Operator &a, const Operator &b) {
  require_same_dim(a, b);
  return Operator(a.entries_ * b.entries_);
}

Operator operator*(std::complex<double> c, const Operator &a) { return Operator(c * a.entries_); }

PermutationUnitary::PermutationUnitary(std::vector<BasisIndex> mapping)
    : mapping_(std::move(mapping)) {
  if (mapping_.empty() || !std::has_single_bit(mapping_.size())) {
    throw std::invalid_argument("permutation size must be a power of two");
  }
  std::vector<bool> seen(mapping_.size(), false);
  for (BasisIndex target : mapping_) {
    if (target >= mapping_.size() || seen[target]) {
      throw std::invalid_argument("mapping is not a bijection");
    }
    seen[target] = true;
  }
}

PermutationUnitary PermutationUnitary::identity(std::size_t dim) {
  std::vector<BasisIndex> mapping(dim);
  for (std::size_t i = 0; i < dim; ++i) mapping[i] = static_cast<BasisIndex>(i);
  return PermutationUnitary(std::move(mapping));
}

std::optional<PermutationUnitary> PermutationUnitary::from_operator(const Operator &op,
                                                                    double tol) {
  if (op.kind() != OperatorKind::permutation && !is_permutation_matrix(op.matrix(), tol)) {
    return std::nullopt;
  }
  const auto &m = op.matrix();
  std::vector<BasisIndex> mapping(op.dim());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Eigen::Index row = 0;
    m.col(c).cwiseAbs().maxCoeff(&row);
    mapping[static_cast<std::size_t>(c)] = static_cast<BasisIndex>(row);
  }
  return PermutationUnitary(std::move(mapping));
}

PermutationUnitary PermutationUnitary::after(const PermutationUnitary &first) const {
  if (first.dim() != dim()) {
    throw std::invalid_argument("permutation dimension mismatch");
  }
  std::vector<BasisIndex> mapping(dim());
  for (std::size_t i = 0; i < dim(); ++i) mapping[i] = mapping_[first.mapping_[i]];
  return PermutationUnitary(std::move(mapping));
}

PermutationUnitary PermutationUnitary::inverse() const {
  std::vector<BasisIndex> mapping(dim());
  for (std::size_t i = 0; i < dim(); ++i) mapping[mapping_[i]] = static_cast<BasisIndex>(i);
  return PermutationUnitary(std::move(mapping));
}

bool PermutationUnitary::is_identity() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (mapping_[i] != i) return false;
  }
  return true;
}

bool PermutationUnitary::is_involution() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (mapping_[mapping_[i]] != i) return false;
  }
  return true;
}

Operator PermutationUnitary::to_operator() const {
  auto n = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < dim(); ++i) {
    m(static_cast<Eigen::Index>(mapping_[i]), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return Operator(std::move(m), OperatorKind::permutation);
}

}  // namespace liouville
