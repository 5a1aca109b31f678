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

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "liouville/errors.h"
#include "liouville/spin_core.h"
#include "test_oracles.h"

using namespace liouville;
using namespace liouville::testing;

TEST(TruthTable, construction_and_parse) {
  TruthTable xor2 = TruthTable::from_bits("0110");
  EXPECT_EQ(xor2.arity(), 2u);
  EXPECT_TRUE(xor2(1));
  EXPECT_FALSE(xor2(3));
  EXPECT_EQ(xor2.to_string(), "0110");

  EXPECT_EQ(TruthTable::parse("# xor\n# second comment\n0110\n"), xor2);
  EXPECT_EQ(TruthTable::parse("0110"), xor2);
  EXPECT_EQ(TruthTable::parse("\n# c\r\n\n  0110  \r\n\n"), xor2);

  EXPECT_THROW(TruthTable::from_bits("011"), MalformedTableError);
  EXPECT_THROW(TruthTable::from_bits("0"), MalformedTableError);
  EXPECT_THROW(TruthTable::from_bits("01a0"), MalformedTableError);
  EXPECT_THROW(TruthTable::parse(""), MalformedTableError);
  EXPECT_THROW(TruthTable::parse("# only a comment\n"), MalformedTableError);
  EXPECT_THROW(TruthTable::parse("0110\n1001\n"), MalformedTableError);
  EXPECT_THROW(TruthTable::parse("0110\n# late comment\n"), MalformedTableError);
  EXPECT_THROW(TruthTable(std::vector<std::uint8_t>{0, 2}), MalformedTableError);
}

TEST(Classify, examples) {
  EXPECT_EQ(classify(TruthTable::from_bits("0000")), OracleClass::Constant0);
  EXPECT_EQ(classify(TruthTable::from_bits("1111")), OracleClass::Constant1);
  EXPECT_EQ(classify(TruthTable::from_bits("0110")), OracleClass::Balanced);
  EXPECT_EQ(classify(TruthTable::from_bits("0001")), OracleClass::Neither);
  EXPECT_STREQ(to_string(OracleClass::Neither), "Neither");
}

TEST(Classify, agrees_with_character_count) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const TruthTable &t : all_tables(n)) {
      const std::string s = t.to_string();
      std::size_t ones = 0;
      for (char c : s) ones += c == '1';
      OracleClass expected = ones == 0              ? OracleClass::Constant0
                             : ones == s.size()     ? OracleClass::Constant1
                             : 2 * ones == s.size() ? OracleClass::Balanced
                                                    : OracleClass::Neither;
      ASSERT_EQ(classify(t), expected) << s;
    }
  }
}

TEST(ReversibleOracle, examples) {
  SpinSystem two(2);
  EXPECT_TRUE(reversible_oracle(two, TruthTable::from_bits("0000")).is_identity());

  PermutationUnitary flip = reversible_oracle(two, TruthTable::from_bits("1111"));
  for (BasisIndex b = 0; b < 8; ++b) EXPECT_EQ(flip.image(b), b ^ 0b100);

  // |y,x> -> |y xor x, x> enumerated by hand: 00->00, 01->11, 10->10, 11->01.
  PermutationUnitary identity_f = reversible_oracle(SpinSystem(1), TruthTable::from_bits("01"));
  EXPECT_EQ(identity_f, PermutationUnitary({0, 3, 2, 1}));

  EXPECT_THROW(reversible_oracle(two, TruthTable::from_bits("01")), std::invalid_argument);
}

TEST(ReversibleOracle, exhaustive_involution_and_action) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (bool separate : {false, true}) {
      SpinSystem system(n, separate);
      for (const TruthTable &t : all_tables(n)) {
        PermutationUnitary u = reversible_oracle(system, t);
        ASSERT_TRUE(u.is_involution()) << t.to_string();
        for (std::size_t x = 0; x < t.size(); ++x) {
          std::string in(system.n_spins(), '0');
          for (std::size_t i = 0; i < n; ++i) in[1 + i] = ((x >> (n - 1 - i)) & 1) ? '1' : '0';
          std::string out = in;
          out[0] = t(x) ? '1' : '0';
          ASSERT_EQ(u.image(system.basis_index(in)), system.basis_index(out));
          if (separate) {
            // the detection spin is untouched
            std::string in_r = in, out_r = out;
            in_r.back() = out_r.back() = '1';
            ASSERT_EQ(u.image(system.basis_index(in_r)), system.basis_index(out_r));
          }
        }
      }
    }
  }
}

TEST(RandomTables, balanced_and_constant) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TruthTable b = random_balanced(2, seed);
    EXPECT_EQ(b.ones(), 2u);
    EXPECT_EQ(b, random_balanced(2, seed));
    TruthTable c = random_constant(3, seed);
    EXPECT_NE(classify(c), OracleClass::Balanced);
    EXPECT_NE(classify(c), OracleClass::Neither);
    EXPECT_EQ(c, random_constant(3, seed));
  }
  std::set<std::string> constants;
  for (std::uint64_t seed = 0; seed < 100; ++seed) constants.insert(random_constant(2, seed).to_string());
  EXPECT_EQ(constants.size(), 2u);

  EXPECT_THROW(random_balanced(0, 1), std::invalid_argument);
  EXPECT_THROW(random_constant(kMaxArity + 1, 1), CapacityError);
  EXPECT_THROW(random_table(kMaxArity + 1, 1), CapacityError);
}

TEST(RandomTables, balanced_sampler_coverage) {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) seen.insert(random_balanced(3, seed).to_string());
  EXPECT_GE(seen.size(), 30u);
  EXPECT_LE(seen.size(), 70u);
}

TEST(OracleChannel, examples) {
  SpinSystem system(2);
  TruthTable t = TruthTable::from_bits("0100");
  PermutationUnitary u = reversible_oracle(system, t);
  for (std::size_t x = 0; x < 4; ++x) {
    std::string in = "0" + std::string(1, "01"[x >> 1]) + std::string(1, "01"[x & 1]);
    std::string out = in;
    out[0] = t(x) ? '1' : '0';
    EXPECT_EQ(oracle_channel(zeeman_product_state(system, in), u).matrix(),
              zeeman_product_state(system, out).matrix());
  }
  DensityOperator mixed = DensityOperator::maximally_mixed(3);
  EXPECT_EQ(oracle_channel(mixed, u).matrix(), mixed.matrix());
  EXPECT_THROW(oracle_channel(DensityOperator::maximally_mixed(2), u), std::invalid_argument);
}

TEST(OracleChannel, linear_over_real_combinations) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coeff(-1.5, 1.5);
  for (std::size_t n = 1; n <= 2; ++n) {
    SpinSystem system(n);
    for (int trial = 0; trial < 40; ++trial) {
      PermutationUnitary u = reversible_oracle(system, random_table(n, static_cast<std::uint64_t>(trial)));
      DensityOperator a(random_density(system.dim(), rng));
      DensityOperator b(random_density(system.dim(), rng));
      for (auto [c1, c2] : {std::pair{0.3, 0.7}, std::pair{coeff(rng), coeff(rng)}}) {
        DensityOperator lhs = oracle_channel(c1 * a + c2 * b, u);
        DensityOperator rhs = c1 * oracle_channel(a, u) + c2 * oracle_channel(b, u);
        EXPECT_LE(max_abs_diff(lhs.matrix(), rhs.matrix()), 1e-12);
      }
    }
  }
}

TEST(OracleBox, counts_applications) {
  SpinSystem system(2);
  OracleBox box(system, TruthTable::from_bits("0110"));
  EXPECT_EQ(box.calls(), 0u);
  DiagonalState d = box.apply(DiagonalState::uniform(3));
  box.apply(to_dense(d));
  EXPECT_EQ(box.calls(), 2u);
  EXPECT_THROW(OracleBox(system, TruthTable::from_bits("01")), std::invalid_argument);
}
