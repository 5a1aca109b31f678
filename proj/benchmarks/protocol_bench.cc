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

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "liouville/oracle.h"
#include "liouville/protocol.h"

namespace {

using namespace liouville;

void BM_LiouvilleDiagonal(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SpinSystem system(n);
  TruthTable table = random_balanced(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_liouville_dj(system, table, Backend::diagonal));
}
BENCHMARK(BM_LiouvilleDiagonal)->DenseRange(2, 20, 3)->Unit(benchmark::kMicrosecond);

void BM_LiouvilleDense(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SpinSystem system(n);
  TruthTable table = random_balanced(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_liouville_dj(system, table, Backend::dense));
}
BENCHMARK(BM_LiouvilleDense)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_PseudoPure(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SpinSystem system(n);
  TruthTable table = random_balanced(n, 1);
  auto config = PseudoPureConfig::thermal(1e-5);
  for (auto _ : state) benchmark::DoNotOptimize(run_pseudo_pure_dj(system, table, config));
}
BENCHMARK(BM_PseudoPure)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_ClassicalWorstCase(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  TruthTable table(std::vector<std::uint8_t>(std::size_t{1} << n, 0));
  for (auto _ : state) benchmark::DoNotOptimize(classical_dj(table));
}
BENCHMARK(BM_ClassicalWorstCase)->DenseRange(4, 20, 4);

}  // namespace

BENCHMARK_MAIN();
