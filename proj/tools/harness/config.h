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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "liouville/oracle.h"
#include "liouville/protocol.h"
#include "liouville/spin_system.h"

namespace liouville::harness {

enum class ExitCode : int { ok = 0, usage = 1, file = 2, malformed_table = 3, capacity = 4 };

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string &what) : std::invalid_argument(what) {}
};

class FileError : public std::runtime_error {
 public:
  explicit FileError(const std::string &what) : std::runtime_error(what) {}
};

/// Where the truth table of an experiment comes from.
///
///   constant0 | constant1        fixed tables (need --n)
///   balanced-random              random balanced table (need --n, --seed)
///   random                       coin flip between a random constant and a
///                                random balanced table (need --n, --seed)
///   file:<path> or <path>        truth-table file
///   bits:<01...>                 literal table
struct OracleSource {
  enum class Kind { constant0, constant1, balanced_random, random, file, bits };

  Kind kind = Kind::constant0;
  std::string payload;  // path or literal bits

  static OracleSource parse(std::string_view spec);
  bool randomized() const { return kind == Kind::balanced_random || kind == Kind::random; }
  bool needs_arity() const { return kind != Kind::file && kind != Kind::bits; }
  std::string describe() const;
};

enum class BackendChoice { dense, diagonal, both };
enum class Detection { ancilla, separate };

BackendChoice parse_backend_choice(std::string_view s);
Detection parse_detection(std::string_view s);

struct ExperimentConfig {
  std::optional<std::size_t> n;
  OracleSource oracle;
  std::optional<std::uint64_t> seed;
  BackendChoice backend = BackendChoice::diagonal;
  Detection detection = Detection::ancilla;
  std::optional<PseudoPureConfig> pseudo_pure;
  double tolerance = kDefaultSignalTolerance;
  Capacity capacity{};

  /// Throws UsageError when a required field is missing or inconsistent.
  void validate() const;
};

struct SweepConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 6;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  Backend backend = Backend::diagonal;
  Detection detection = Detection::ancilla;
  std::optional<PseudoPureConfig> pseudo_pure;
  double tolerance = kDefaultSignalTolerance;
  Capacity capacity{};

  void validate() const;
};

/// Parses "6" as 1..6 and "2..8" as 2..8.
std::pair<std::size_t, std::size_t> parse_n_range(std::string_view s);

/// Reads a truth-table file. FileError when unreadable, MalformedTableError
/// when the content is invalid.
TruthTable load_table_file(const std::string &path);

/// Materializes the table described by `source`. `n` and `seed` are required
/// for generator sources.
TruthTable resolve_table(const OracleSource &source, std::optional<std::size_t> n,
                         std::optional<std::uint64_t> seed);

/// Deterministic 64-bit mixer used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace liouville::harness
