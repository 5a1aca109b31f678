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

#include "harness/config.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "liouville/errors.h"

namespace liouville::harness {

namespace {

constexpr std::string_view kFilePrefix = "file:";
constexpr std::string_view kBitsPrefix = "bits:";

std::size_t parse_count(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return value;
}

void validate_common(const Capacity &capacity, double tolerance) {
  if (!(tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  if (capacity.dense_spins > kMaxDenseSpins) {
    throw UsageError("dense capacity cannot exceed " + std::to_string(kMaxDenseSpins) + " spins");
  }
  if (capacity.diagonal_spins > kMaxDiagonalSpins) {
    throw UsageError("diagonal capacity cannot exceed " + std::to_string(kMaxDiagonalSpins) +
                     " spins");
  }
}

TruthTable constant_table(std::size_t n, std::uint8_t value) {
  if (n == 0) throw UsageError("--n must be at least 1");
  if (n > kMaxArity) {
    throw CapacityError("arity " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kMaxArity));
  }
  return TruthTable(std::vector<std::uint8_t>(std::size_t{1} << n, value));
}

}  // namespace

OracleSource OracleSource::parse(std::string_view spec) {
  if (spec.empty()) throw UsageError("empty oracle spec");
  if (spec == "constant0") return {Kind::constant0, {}};
  if (spec == "constant1") return {Kind::constant1, {}};
  if (spec == "balanced-random") return {Kind::balanced_random, {}};
  if (spec == "random") return {Kind::random, {}};
  if (spec.starts_with(kFilePrefix)) {
    auto path = spec.substr(kFilePrefix.size());
    if (path.empty()) throw UsageError("file: needs a path");
    return {Kind::file, std::string(path)};
  }
  if (spec.starts_with(kBitsPrefix)) return {Kind::bits, std::string(spec.substr(kBitsPrefix.size()))};
  return {Kind::file, std::string(spec)};
}

std::string OracleSource::describe() const {
  switch (kind) {
    case Kind::constant0:
      return "constant0";
    case Kind::constant1:
      return "constant1";
    case Kind::balanced_random:
      return "balanced-random";
    case Kind::random:
      return "random";
    case Kind::file:
      return "file:" + payload;
    case Kind::bits:
      return "bits:" + payload;
  }
  return "?";
}

BackendChoice parse_backend_choice(std::string_view s) {
  if (s == "dense") return BackendChoice::dense;
  if (s == "diagonal") return BackendChoice::diagonal;
  if (s == "both") return BackendChoice::both;
  throw UsageError("backend must be dense, diagonal or both");
}

Detection parse_detection(std::string_view s) {
  if (s == "ancilla") return Detection::ancilla;
  if (s == "separate") return Detection::separate;
  throw UsageError("detection must be ancilla or separate");
}

void ExperimentConfig::validate() const {
  if (oracle.needs_arity() && !n) {
    throw UsageError("--n is required for oracle '" + oracle.describe() + "'");
  }
  if (n && *n == 0) throw UsageError("--n must be at least 1");
  if (oracle.randomized() && !seed) {
    throw UsageError("--seed is required for randomized oracle '" + oracle.describe() + "'");
  }
  validate_common(capacity, tolerance);
}

void SweepConfig::validate() const {
  if (n_min == 0 || n_min > n_max) throw UsageError("sweep range must satisfy 1 <= min <= max");
  validate_common(capacity, tolerance);
}

std::pair<std::size_t, std::size_t> parse_n_range(std::string_view s) {
  auto dots = s.find("..");
  if (dots == std::string_view::npos) return {1, parse_count(s)};
  return {parse_count(s.substr(0, dots)), parse_count(s.substr(dots + 2))};
}

TruthTable load_table_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open truth-table file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FileError("cannot read truth-table file '" + path + "'");
  return TruthTable::parse(buffer.str());
}

TruthTable resolve_table(const OracleSource &source, std::optional<std::size_t> n,
                         std::optional<std::uint64_t> seed) {
  auto arity = [&] {
    if (!n) throw UsageError("--n is required for oracle '" + source.describe() + "'");
    return *n;
  };
  auto required_seed = [&] {
    if (!seed) throw UsageError("--seed is required for oracle '" + source.describe() + "'");
    return *seed;
  };
  switch (source.kind) {
    case OracleSource::Kind::constant0:
      return constant_table(arity(), 0);
    case OracleSource::Kind::constant1:
      return constant_table(arity(), 1);
    case OracleSource::Kind::balanced_random:
      return random_balanced(arity(), required_seed());
    case OracleSource::Kind::random: {
      std::size_t k = arity();
      std::uint64_t s = required_seed();
      return (mix_seed(s, 0) & 1) ? random_constant(k, mix_seed(s, 1))
                                  : random_balanced(k, mix_seed(s, 2));
    }
    case OracleSource::Kind::file:
      return load_table_file(source.payload);
    case OracleSource::Kind::bits:
      return TruthTable::from_bits(source.payload);
  }
  throw UsageError("unknown oracle source");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a combined word
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace liouville::harness
