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

#include "harness/report.h"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace liouville::harness {

namespace {

constexpr std::string_view kRunHeader = "n,class,signal,verdict,evaluations,backend,protocol";
constexpr std::string_view kSweepHeader =
    "n,liouville_signal,balanced_mean_abs_signal,pseudo_pure_signal,ratio,classical_worst_case";

// Shortest representation that parses back to the same double.
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number in CSV: '" + std::string(s) + "'");
  }
  return v;
}

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer in CSV: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    cells.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

std::vector<std::vector<std::string_view>> csv_rows(std::string_view csv,
                                                    std::string_view expected_header) {
  std::vector<std::vector<std::string_view>> rows;
  bool header_seen = false;
  const std::size_t width = split(expected_header, ',').size();
  for (auto line : split(csv, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != expected_header) throw std::invalid_argument("unexpected CSV header");
      header_seen = true;
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != width) throw std::invalid_argument("CSV row has wrong width");
    rows.push_back(std::move(cells));
  }
  if (!header_seen) throw std::invalid_argument("CSV has no header");
  return rows;
}

nlohmann::json optional_number(const std::optional<double> &v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> optional_from(const nlohmann::json &j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

nlohmann::json to_json(const Report &report) {
  nlohmann::json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = report.command;
  doc["table"] = report.table;
  doc["records"] = nlohmann::json::array();
  for (const auto &r : report.records) {
    doc["records"].push_back({{"protocol", r.protocol},
                              {"n", r.n},
                              {"class", r.oracle_class},
                              {"signal", r.signal},
                              {"verdict", r.verdict},
                              {"evaluations", r.evaluations},
                              {"backend", r.backend},
                              {"wall_ms", r.wall_ms}});
  }
  doc["sweep"] = nlohmann::json::array();
  for (const auto &row : report.sweep) {
    doc["sweep"].push_back({{"n", row.n},
                            {"liouville_signal", row.liouville_signal},
                            {"balanced_mean_abs_signal", row.balanced_mean_abs_signal},
                            {"pseudo_pure_signal", optional_number(row.pseudo_pure_signal)},
                            {"ratio", optional_number(row.ratio)},
                            {"classical_worst_case", row.classical_worst_case}});
  }
  doc["cross_check"] = optional_number(report.cross_check);
  doc["warnings"] = report.warnings;
  return doc;
}

nlohmann::json without_timing(nlohmann::json doc) {
  if (doc.is_object()) {
    doc.erase("wall_ms");
    for (auto &[key, value] : doc.items()) value = without_timing(value);
  } else if (doc.is_array()) {
    for (auto &value : doc) value = without_timing(value);
  }
  return doc;
}

std::string to_csv(const Report &report) {
  std::ostringstream out;
  if (report.command == "sweep") {
    out << kSweepHeader << '\n';
    for (const auto &row : report.sweep) {
      out << row.n << ',' << format_double(row.liouville_signal) << ','
          << format_double(row.balanced_mean_abs_signal) << ','
          << (row.pseudo_pure_signal ? format_double(*row.pseudo_pure_signal) : "") << ','
          << (row.ratio ? format_double(*row.ratio) : "") << ',' << row.classical_worst_case
          << '\n';
    }
  } else {
    out << kRunHeader << '\n';
    for (const auto &r : report.records) {
      out << r.n << ',' << r.oracle_class << ',' << format_double(r.signal) << ',' << r.verdict
          << ',' << r.evaluations << ',' << r.backend << ',' << r.protocol << '\n';
    }
  }
  return out.str();
}

std::vector<RunRecord> records_from_json(const nlohmann::json &doc) {
  std::vector<RunRecord> records;
  for (const auto &j : doc.at("records")) {
    RunRecord r;
    r.protocol = j.at("protocol").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.oracle_class = j.at("class").get<std::string>();
    r.signal = j.at("signal").get<double>();
    r.verdict = j.at("verdict").get<std::string>();
    r.evaluations = j.at("evaluations").get<std::size_t>();
    r.backend = j.at("backend").get<std::string>();
    r.wall_ms = j.value("wall_ms", 0.0);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<RunRecord> records_from_csv(const std::string &csv) {
  std::vector<RunRecord> records;
  for (const auto &cells : csv_rows(csv, kRunHeader)) {
    RunRecord r;
    r.n = parse_size(cells[0]);
    r.oracle_class = std::string(cells[1]);
    r.signal = parse_double(cells[2]);
    r.verdict = std::string(cells[3]);
    r.evaluations = parse_size(cells[4]);
    r.backend = std::string(cells[5]);
    r.protocol = std::string(cells[6]);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<SweepRow> sweep_from_json(const nlohmann::json &doc) {
  std::vector<SweepRow> rows;
  for (const auto &j : doc.at("sweep")) {
    SweepRow row;
    row.n = j.at("n").get<std::size_t>();
    row.liouville_signal = j.at("liouville_signal").get<double>();
    row.balanced_mean_abs_signal = j.at("balanced_mean_abs_signal").get<double>();
    row.pseudo_pure_signal = optional_from(j.at("pseudo_pure_signal"));
    row.ratio = optional_from(j.at("ratio"));
    row.classical_worst_case = j.at("classical_worst_case").get<std::size_t>();
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> sweep_from_csv(const std::string &csv) {
  std::vector<SweepRow> rows;
  for (const auto &cells : csv_rows(csv, kSweepHeader)) {
    SweepRow row;
    row.n = parse_size(cells[0]);
    row.liouville_signal = parse_double(cells[1]);
    row.balanced_mean_abs_signal = parse_double(cells[2]);
    if (!cells[3].empty()) row.pseudo_pure_signal = parse_double(cells[3]);
    if (!cells[4].empty()) row.ratio = parse_double(cells[4]);
    row.classical_worst_case = parse_size(cells[5]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace liouville::harness
