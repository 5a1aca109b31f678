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
#include <string>
#include <string_view>
#include <vector>

#include "liouville/operator.h"
#include "liouville/spin_system.h"
#include "liouville/states.h"

namespace liouville {

// One ancilla spin always accompanies the inputs.
inline constexpr std::size_t kMaxArity = kMaxDiagonalSpins - 1;

/// Boolean function f: {0,1}^n -> {0,1} stored as its 2^n output bits. Entry
/// x is f evaluated on input spins I_1..I_n read as a binary number with I_1
/// most significant.
class TruthTable {
 public:
  /// Throws MalformedTableError unless the length is a power of two >= 2, and
  /// CapacityError when the arity exceeds kMaxArity.
  explicit TruthTable(std::vector<std::uint8_t> bits);

  /// From a string of '0'/'1' characters.
  static TruthTable from_bits(std::string_view bits);

  /// Parses the truth-table file format: optional '#' comment lines followed
  /// by a single line of 2^n '0'/'1' characters. Blank lines and trailing
  /// whitespace are ignored.
  static TruthTable parse(std::string_view text);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return bits_.size(); }
  bool operator()(std::size_t x) const { return bits_[x] != 0; }
  std::size_t ones() const;
  std::string to_string() const;

  friend bool operator==(const TruthTable &, const TruthTable &) = default;

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t arity_;
};

enum class OracleClass { Constant0, Constant1, Balanced, Neither };

OracleClass classify(const TruthTable &table);
const char *to_string(OracleClass c);

/// U_f: |y, x> -> |y xor f(x), x>, y on the ancilla, x on the inputs. A
/// separate detection spin is left alone. Throws std::invalid_argument on
/// arity mismatch.
PermutationUnitary reversible_oracle(const SpinSystem &system, const TruthTable &table);

/// Uniformly random table with exactly 2^(n-1) ones; deterministic in seed.
TruthTable random_balanced(std::size_t n, std::uint64_t seed);
/// All zeros or all ones with equal probability; deterministic in seed.
TruthTable random_constant(std::size_t n, std::uint64_t seed);
/// Uniform over all 2^(2^n) tables; deterministic in seed.
TruthTable random_table(std::size_t n, std::uint64_t seed);

DensityOperator oracle_channel(const DensityOperator &state, const PermutationUnitary &oracle);
DiagonalState oracle_channel(const DiagonalState &state, const PermutationUnitary &oracle);

/// Black-box wrapper around U_f that counts how many times it was applied.
/// Not thread-safe; each protocol run owns its own box.
class OracleBox {
 public:
  OracleBox(const SpinSystem &system, const TruthTable &table);

  template <typename State>
  State apply(const State &state) {
    ++calls_;
    return oracle_channel(state, permutation_);
  }

  std::size_t calls() const { return calls_; }
  const SpinSystem &system() const { return system_; }
  const TruthTable &table() const { return table_; }

 private:
  SpinSystem system_;
  TruthTable table_;
  PermutationUnitary permutation_;
  std::size_t calls_ = 0;
};

}  // namespace liouville
