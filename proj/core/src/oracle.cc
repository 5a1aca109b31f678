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

#include "liouville/oracle.h"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "liouville/errors.h"
#include "liouville/spin_core.h"

namespace liouville {

namespace {

void require_arity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("arity must be at least 1");
  if (n > kMaxArity) {
    throw CapacityError("arity " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kMaxArity));
  }
}

std::string_view trim(std::string_view s) {
  const char *ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

}  // namespace

TruthTable::TruthTable(std::vector<std::uint8_t> bits) : bits_(std::move(bits)), arity_(0) {
  if (bits_.size() < 2 || !std::has_single_bit(bits_.size())) {
    throw MalformedTableError("truth table length " + std::to_string(bits_.size()) +
                              " is not a power of two >= 2");
  }
  arity_ = static_cast<std::size_t>(std::countr_zero(bits_.size()));
  require_arity(arity_);
  for (auto b : bits_) {
    if (b > 1) throw MalformedTableError("truth table entries must be 0 or 1");
  }
}

TruthTable TruthTable::from_bits(std::string_view bits) {
  std::vector<std::uint8_t> v;
  v.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw MalformedTableError(std::string("unexpected character '") + c + "' in truth table");
    }
    v.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return TruthTable(std::move(v));
}

TruthTable TruthTable::parse(std::string_view text) {
  std::string_view table;
  bool have_table = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;

    std::string_view content = trim(line);
    if (content.empty()) continue;
    if (content.front() == '#') {
      if (have_table) {
        throw MalformedTableError("comment on line " + std::to_string(line_no) +
                                  " follows the table line");
      }
      continue;
    }
    if (have_table) {
      throw MalformedTableError("more than one table line (line " + std::to_string(line_no) + ")");
    }
    table = content;
    have_table = true;
  }
  if (!have_table) throw MalformedTableError("no truth table line found");
  return from_bits(table);
}

std::size_t TruthTable::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string TruthTable::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
  return s;
}

OracleClass classify(const TruthTable &table) {
  const std::size_t ones = table.ones();
  if (ones == 0) return OracleClass::Constant0;
  if (ones == table.size()) return OracleClass::Constant1;
  if (ones == table.size() / 2) return OracleClass::Balanced;
  return OracleClass::Neither;
}

const char *to_string(OracleClass c) {
  switch (c) {
    case OracleClass::Constant0:
      return "Constant0";
    case OracleClass::Constant1:
      return "Constant1";
    case OracleClass::Balanced:
      return "Balanced";
    case OracleClass::Neither:
      return "Neither";
  }
  return "?";
}

PermutationUnitary reversible_oracle(const SpinSystem &system, const TruthTable &table) {
  if (table.arity() != system.n_inputs()) {
    throw std::invalid_argument("truth table arity " + std::to_string(table.arity()) +
                                " does not match " + std::to_string(system.n_inputs()) +
                                " input spins");
  }
  const BasisIndex ancilla = system.mask_of(system.ancilla());
  const unsigned shift = system.has_detection_spin() ? 1U : 0U;
  const BasisIndex input_mask = (BasisIndex{1} << system.n_inputs()) - 1;
  std::vector<BasisIndex> mapping(system.dim());
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    auto b = static_cast<BasisIndex>(i);
    BasisIndex x = (b >> shift) & input_mask;
    mapping[i] = table(x) ? (b ^ ancilla) : b;
  }
  return PermutationUnitary(std::move(mapping));
}

TruthTable random_balanced(std::size_t n, std::uint64_t seed) {
  require_arity(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> bits(size, 0);
  std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(size / 2), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(bits.begin(), bits.end(), rng);
  return TruthTable(std::move(bits));
}

TruthTable random_constant(std::size_t n, std::uint64_t seed) {
  require_arity(n);
  std::mt19937_64 rng(seed);
  auto value = static_cast<std::uint8_t>(rng() >> 63);
  return TruthTable(std::vector<std::uint8_t>(std::size_t{1} << n, value));
}

TruthTable random_table(std::size_t n, std::uint64_t seed) {
  require_arity(n);
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  for (auto &b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
  return TruthTable(std::move(bits));
}

DensityOperator oracle_channel(const DensityOperator &state, const PermutationUnitary &oracle) {
  return conjugate(state, oracle);
}

DiagonalState oracle_channel(const DiagonalState &state, const PermutationUnitary &oracle) {
  return conjugate(state, oracle);
}

OracleBox::OracleBox(const SpinSystem &system, const TruthTable &table)
    : system_(system), table_(table), permutation_(reversible_oracle(system, table)) {}

}  // namespace liouville
