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
#include <cstdint>
#include <string_view>

namespace liouville {

using SpinIndex = std::size_t;
using BasisIndex = std::uint32_t;

enum class Backend { dense, diagonal };

// Absolute limits of the representation. Dense matrices beyond 15 spins do not
// fit in memory; basis indices are 32-bit.
inline constexpr std::size_t kMaxDenseSpins = 15;
inline constexpr std::size_t kMaxDiagonalSpins = 30;

/// Per-run capacity limits. The defaults are desk-scale; raising them is
/// allowed up to the absolute limits above.
struct Capacity {
  std::size_t dense_spins = 13;
  std::size_t diagonal_spins = 26;

  std::size_t limit(Backend backend) const {
    return backend == Backend::dense ? dense_spins : diagonal_spins;
  }
};

/// Register layout.
///
/// Spin 0 is the ancilla I_0 and occupies the most significant bit of a basis
/// index. Input spins I_1..I_n follow in order. A separate detection spin I_r,
/// when present, is the least significant bit. Bit value 0 is the alpha level,
/// 1 the beta level.
class SpinSystem {
 public:
  /// A Deutsch-Jozsa register with `n_inputs` >= 1 input spins.
  explicit SpinSystem(std::size_t n_inputs, bool separate_detection_spin = false);

  /// A plain register of `n_spins` >= 1 spins without protocol roles. Spin
  /// indices still run from the most significant bit down.
  static SpinSystem bare(std::size_t n_spins);

  std::size_t n_inputs() const { return n_inputs_; }
  bool has_detection_spin() const { return separate_detection_; }
  std::size_t n_spins() const { return n_inputs_ + 1 + (separate_detection_ ? 1 : 0); }
  std::size_t dim() const { return std::size_t{1} << n_spins(); }

  SpinIndex ancilla() const { return 0; }
  SpinIndex input(std::size_t i) const;  // 1-based, as I_i
  SpinIndex detection() const { return separate_detection_ ? n_inputs_ + 1 : 0; }

  /// Bit position of spin `k` inside a basis index.
  unsigned bit_of(SpinIndex k) const;
  BasisIndex mask_of(SpinIndex k) const { return BasisIndex{1} << bit_of(k); }

  /// Throws std::out_of_range for an index outside the register.
  void require_spin(SpinIndex k) const;

  /// Basis index for a configuration string of '0'/'1' characters, spin 0
  /// first. Throws std::invalid_argument on length mismatch or bad characters.
  BasisIndex basis_index(std::string_view config) const;

  /// Throws CapacityError when the register exceeds `capacity` for `backend`.
  void require_capacity(Backend backend, const Capacity &capacity = {}) const;

  friend bool operator==(const SpinSystem &, const SpinSystem &) = default;

 private:
  SpinSystem(std::size_t n_inputs, bool separate_detection_spin, bool bare);

  std::size_t n_inputs_;
  bool separate_detection_;
};

const char *to_string(Backend backend);

}  // namespace liouville
