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

#include <string>

#include "harness/config.h"
#include "harness/report.h"

namespace liouville::harness {

/// One experiment: the Liouville solver on each selected backend, the
/// pseudo-pure baseline when configured, and the classical solver.
Report cmd_run(const ExperimentConfig &config);

/// Scaling table over an arity range. Each arity runs as an independent task.
Report cmd_sweep(const SweepConfig &config);

/// Human-readable summary: arity, class, ones-count and, for n <= 4, the full
/// reversible-oracle permutation.
std::string cmd_oracle(const OracleSource &source, std::optional<std::size_t> n,
                       std::optional<std::uint64_t> seed);

}  // namespace liouville::harness
