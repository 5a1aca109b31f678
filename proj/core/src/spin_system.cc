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

#include "liouville/spin_system.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "liouville/errors.h"

namespace liouville {

SpinSystem::SpinSystem(std::size_t n_inputs, bool separate_detection_spin)
    : SpinSystem(n_inputs, separate_detection_spin, false) {}

SpinSystem::SpinSystem(std::size_t n_inputs, bool separate_detection_spin, bool bare)
    : n_inputs_(n_inputs), separate_detection_(separate_detection_spin) {
  if (!bare && n_inputs == 0) {
    throw std::invalid_argument("SpinSystem needs at least one input spin");
  }
  if (n_spins() > kMaxDiagonalSpins) {
    throw CapacityError("register of " + std::to_string(n_spins()) + " spins exceeds the " +
                        std::to_string(kMaxDiagonalSpins) + "-spin representation limit");
  }
}

SpinSystem SpinSystem::bare(std::size_t n_spins) {
  if (n_spins == 0) {
    throw std::invalid_argument("register needs at least one spin");
  }
  return SpinSystem(n_spins - 1, false, true);
}

SpinIndex SpinSystem::input(std::size_t i) const {
  if (i == 0 || i > n_inputs_) {
    throw std::out_of_range("input spin I_" + std::to_string(i) + " does not exist");
  }
  return i;
}

unsigned SpinSystem::bit_of(SpinIndex k) const {
  require_spin(k);
  return static_cast<unsigned>(n_spins() - 1 - k);
}

void SpinSystem::require_spin(SpinIndex k) const {
  if (k >= n_spins()) {
    throw std::out_of_range("spin index " + std::to_string(k) + " outside register of " +
                            std::to_string(n_spins()) + " spins");
  }
}

BasisIndex SpinSystem::basis_index(std::string_view config) const {
  if (config.size() != n_spins()) {
    throw std::invalid_argument("configuration has " + std::to_string(config.size()) +
                                " characters, register has " + std::to_string(n_spins()) +
                                " spins");
  }
  BasisIndex index = 0;
  for (char c : config) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("configuration characters must be '0' or '1'");
    }
    index = (index << 1) | static_cast<BasisIndex>(c == '1');
  }
  return index;
}

void SpinSystem::require_capacity(Backend backend, const Capacity &capacity) const {
  std::size_t hard = backend == Backend::dense ? kMaxDenseSpins : kMaxDiagonalSpins;
  std::size_t limit = std::min(capacity.limit(backend), hard);
  if (n_spins() > limit) {
    throw CapacityError(std::string(to_string(backend)) + " backend holds at most " +
                        std::to_string(limit) + " spins, register has " +
                        std::to_string(n_spins()));
  }
}

const char *to_string(Backend backend) {
  switch (backend) {
    case Backend::dense:
      return "dense";
    case Backend::diagonal:
      return "diagonal";
  }
  return "?";
}

}  // namespace liouville
