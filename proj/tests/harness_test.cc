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

#include <string>

#include "gtest/gtest.h"

#include "harness/commands.h"
#include "harness/config.h"
#include "harness/report.h"
#include "liouville/errors.h"

using namespace liouville;
using namespace liouville::harness;

namespace {

const std::string kData = LIOUVILLE_TEST_DATA_DIR;

ExperimentConfig config_for(const std::string &oracle, std::optional<std::size_t> n,
                            BackendChoice backend = BackendChoice::diagonal) {
  ExperimentConfig cfg;
  cfg.oracle = OracleSource::parse(oracle);
  cfg.n = n;
  cfg.backend = backend;
  return cfg;
}

}  // namespace

TEST(OracleSource, parse) {
  EXPECT_EQ(OracleSource::parse("constant1").kind, OracleSource::Kind::constant1);
  EXPECT_TRUE(OracleSource::parse("balanced-random").randomized());
  EXPECT_TRUE(OracleSource::parse("random").randomized());
  auto file = OracleSource::parse("file:xor.tt");
  EXPECT_EQ(file.kind, OracleSource::Kind::file);
  EXPECT_EQ(file.payload, "xor.tt");
  EXPECT_EQ(OracleSource::parse("tables/xor.tt").kind, OracleSource::Kind::file);
  EXPECT_EQ(OracleSource::parse("bits:0110").payload, "0110");
  EXPECT_THROW(OracleSource::parse(""), UsageError);
  EXPECT_THROW(OracleSource::parse("file:"), UsageError);
}

TEST(Config, ranges_and_validation) {
  EXPECT_EQ(parse_n_range("6"), (std::pair<std::size_t, std::size_t>{1, 6}));
  EXPECT_EQ(parse_n_range("2..8"), (std::pair<std::size_t, std::size_t>{2, 8}));
  EXPECT_THROW(parse_n_range("two"), UsageError);
  EXPECT_THROW(parse_backend_choice("gpu"), UsageError);

  EXPECT_THROW(config_for("balanced-random", 2).validate(), UsageError);
  EXPECT_THROW(config_for("constant0", std::nullopt).validate(), UsageError);
  EXPECT_NO_THROW(config_for("bits:0110", std::nullopt).validate());
  auto cfg = config_for("constant0", 2);
  cfg.tolerance = 0.0;
  EXPECT_THROW(cfg.validate(), UsageError);

  SweepConfig sweep;
  sweep.n_min = 3;
  sweep.n_max = 2;
  EXPECT_THROW(sweep.validate(), UsageError);
}

TEST(Config, table_files) {
  EXPECT_EQ(load_table_file(kData + "/xor.tt").to_string(), "0110");
  EXPECT_THROW(load_table_file(kData + "/does_not_exist.tt"), FileError);
  EXPECT_THROW(load_table_file(kData + "/malformed.tt"), MalformedTableError);
}

TEST(Config, random_source_respects_the_promise) {
  int constant = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TruthTable t = resolve_table(OracleSource::parse("random"), 3, seed);
    OracleClass c = classify(t);
    EXPECT_NE(c, OracleClass::Neither);
    constant += c != OracleClass::Balanced;
    EXPECT_EQ(t, resolve_table(OracleSource::parse("random"), 3, seed));
  }
  EXPECT_GT(constant, 50);
  EXPECT_LT(constant, 150);
}

TEST(CmdRun, constant0_on_diagonal_backend) {
  Report r = cmd_run(config_for("constant0", 3));
  ASSERT_EQ(r.records.size(), 2u);
  const RunRecord &liouville = r.records[0];
  EXPECT_EQ(liouville.protocol, "liouville");
  EXPECT_EQ(liouville.backend, "diagonal");
  EXPECT_NEAR(liouville.signal, 1.0, 1e-12);
  EXPECT_EQ(liouville.verdict, "Constant0");
  EXPECT_EQ(liouville.evaluations, 1u);
  EXPECT_EQ(r.records[1].protocol, "classical");
  EXPECT_EQ(r.records[1].evaluations, 5u);
  EXPECT_FALSE(r.cross_check.has_value());
}

TEST(CmdRun, both_backends_cross_check) {
  Report r = cmd_run(config_for("file:" + kData + "/xor.tt", 2, BackendChoice::both));
  ASSERT_TRUE(r.cross_check.has_value());
  EXPECT_LT(*r.cross_check, 1e-12);
  EXPECT_EQ(r.records[0].backend, "dense");
  EXPECT_EQ(r.records[1].backend, "diagonal");
  EXPECT_EQ(r.records[0].oracle_class, "Balanced");
}

TEST(CmdRun, pseudo_pure_record_and_warnings) {
  auto cfg = config_for("bits:0001", std::nullopt);
  cfg.pseudo_pure = PseudoPureConfig::fixed(0.5);
  Report r = cmd_run(cfg);
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[1].protocol, "pseudo-pure");
  EXPECT_EQ(r.records[2].verdict, "PromiseViolated");
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("promise"), std::string::npos);
}

TEST(CmdRun, errors) {
  EXPECT_THROW(cmd_run(config_for("constant0", 13, BackendChoice::dense)), CapacityError);
  EXPECT_THROW(cmd_run(config_for("bits:0110", 3)), UsageError);
  EXPECT_THROW(cmd_run(config_for("file:" + kData + "/nope.tt", 2)), FileError);
  EXPECT_THROW(cmd_run(config_for("bits:010", std::nullopt)), MalformedTableError);

  auto raised = config_for("constant0", 3);
  raised.capacity.diagonal_spins = 28;
  Report r = cmd_run(raised);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(CmdRun, deterministic_given_seed) {
  auto cfg = config_for("balanced-random", 5, BackendChoice::both);
  cfg.seed = 42;
  cfg.pseudo_pure = PseudoPureConfig::thermal(1e-3);
  std::string a = without_timing(to_json(cmd_run(cfg))).dump();
  std::string b = without_timing(to_json(cmd_run(cfg))).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("wall_ms"), std::string::npos);
  cfg.seed = 43;
  EXPECT_NE(without_timing(to_json(cmd_run(cfg))).dump(), a);
}

TEST(CmdRun, csv_and_json_hold_the_same_records) {
  auto cfg = config_for("balanced-random", 4, BackendChoice::both);
  cfg.seed = 9;
  cfg.pseudo_pure = PseudoPureConfig::fixed(0.2);
  Report r = cmd_run(cfg);
  auto doc = nlohmann::json::parse(to_json(r).dump());
  EXPECT_EQ(doc.at("schema"), "v1");
  auto from_json = records_from_json(doc);
  auto from_csv = records_from_csv(to_csv(r));
  ASSERT_EQ(from_json.size(), from_csv.size());
  for (std::size_t i = 0; i < from_json.size(); ++i) {
    from_json[i].wall_ms = 0.0;
    EXPECT_EQ(from_json[i], from_csv[i]) << i;
  }
}

TEST(CmdRun, verdicts_consistent_with_signals) {
  for (const char *spec : {"constant0", "constant1", "balanced-random"}) {
    auto cfg = config_for(spec, 4, BackendChoice::both);
    cfg.seed = 5;
    cfg.tolerance = 1e-9;
    for (const RunRecord &rec : cmd_run(cfg).records) {
      if (rec.protocol == "pseudo-pure") continue;
      EXPECT_EQ(rec.verdict, to_string(classify_signal(rec.signal, cfg.tolerance))) << spec;
    }
  }
}

TEST(CmdSweep, columns) {
  SweepConfig cfg;
  cfg.n_min = 1;
  cfg.n_max = 6;
  cfg.trials = 10;
  cfg.seed = 3;
  Report r = cmd_sweep(cfg);
  ASSERT_EQ(r.sweep.size(), 6u);
  const std::size_t classical[] = {2, 3, 5, 9, 17, 33};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(r.sweep[i].n, i + 1);
    EXPECT_NEAR(r.sweep[i].liouville_signal, 1.0, 1e-12);
    EXPECT_LT(r.sweep[i].balanced_mean_abs_signal, 1e-12);
    EXPECT_EQ(r.sweep[i].classical_worst_case, classical[i]);
    EXPECT_FALSE(r.sweep[i].pseudo_pure_signal.has_value());
  }
}

TEST(CmdSweep, thermal_pseudo_pure_column_decreases) {
  SweepConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 6;
  cfg.trials = 2;
  cfg.pseudo_pure = PseudoPureConfig::thermal(1e-5);
  Report r = cmd_sweep(cfg);
  for (std::size_t i = 1; i < r.sweep.size(); ++i) {
    EXPECT_LT(*r.sweep[i].pseudo_pure_signal, *r.sweep[i - 1].pseudo_pure_signal);
    EXPECT_GT(*r.sweep[i].ratio, *r.sweep[i - 1].ratio);
  }
}

TEST(CmdSweep, deterministic_and_round_trips) {
  SweepConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 5;
  cfg.trials = 5;
  cfg.seed = 77;
  cfg.detection = Detection::separate;
  cfg.pseudo_pure = PseudoPureConfig::fixed(0.1);
  Report a = cmd_sweep(cfg);
  EXPECT_EQ(to_json(a).dump(), to_json(cmd_sweep(cfg)).dump());
  EXPECT_EQ(sweep_from_json(to_json(a)), sweep_from_csv(to_csv(a)));
  EXPECT_EQ(sweep_from_json(to_json(a)), a.sweep);

  cfg.n_max = 13;
  EXPECT_THROW(cmd_sweep(cfg), CapacityError);
}

TEST(CmdOracle, summaries) {
  std::string xor2 = cmd_oracle(OracleSource::parse(kData + "/xor.tt"), std::nullopt, std::nullopt);
  EXPECT_NE(xor2.find("n=2, Balanced, ones=2"), std::string::npos);
  EXPECT_NE(xor2.find("|001> -> |101>"), std::string::npos);

  std::string zero = cmd_oracle(OracleSource::parse("bits:0000"), std::nullopt, std::nullopt);
  EXPECT_NE(zero.find("Constant0"), std::string::npos);
  EXPECT_NE(zero.find("identity"), std::string::npos);

  std::string neither = cmd_oracle(OracleSource::parse("bits:0001"), std::nullopt, std::nullopt);
  EXPECT_NE(neither.find("Neither"), std::string::npos);
  EXPECT_NE(neither.find("warning"), std::string::npos);

  std::string big = cmd_oracle(OracleSource::parse("constant1"), 5, std::nullopt);
  EXPECT_NE(big.find("n=5, Constant1, ones=32"), std::string::npos);
  EXPECT_EQ(big.find("->"), std::string::npos);

  EXPECT_THROW(cmd_oracle(OracleSource::parse(kData + "/malformed.tt"), std::nullopt, std::nullopt),
               MalformedTableError);
}
