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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace liouville::harness {

inline constexpr const char *kSchemaVersion = "v1";

struct RunRecord {
  std::string protocol;  // liouville | pseudo-pure | classical
  std::size_t n = 0;
  std::string oracle_class;
  double signal = 0.0;
  std::string verdict;
  std::size_t evaluations = 0;
  std::string backend;  // dense | diagonal | none
  double wall_ms = 0.0;

  friend bool operator==(const RunRecord &, const RunRecord &) = default;
};

struct SweepRow {
  std::size_t n = 0;
  double liouville_signal = 0.0;
  double balanced_mean_abs_signal = 0.0;
  std::optional<double> pseudo_pure_signal;
  std::optional<double> ratio;
  std::size_t classical_worst_case = 0;

  friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

struct Report {
  std::string command;
  std::string table;  // bits of the evaluated table, run only
  std::vector<RunRecord> records;
  std::vector<SweepRow> sweep;
  std::optional<double> cross_check;  // |dense - diagonal| when both ran
  std::vector<std::string> warnings;
};

nlohmann::json to_json(const Report &report);
/// Drops every "wall_ms" field; what determinism checks compare.
nlohmann::json without_timing(nlohmann::json doc);

/// Run reports: n,class,signal,verdict,evaluations,backend,protocol.
/// Sweep reports: n,liouville_signal,balanced_mean_abs_signal,
/// pseudo_pure_signal,ratio,classical_worst_case (empty cell for absent).
std::string to_csv(const Report &report);

std::vector<RunRecord> records_from_json(const nlohmann::json &doc);
std::vector<RunRecord> records_from_csv(const std::string &csv);
std::vector<SweepRow> sweep_from_json(const nlohmann::json &doc);
std::vector<SweepRow> sweep_from_csv(const std::string &csv);

}  // namespace liouville::harness
