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

#include <stdexcept>
#include <string>

namespace liouville {

/// Raised when a register does not fit the selected backend.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string &what) : std::length_error(what) {}
};

/// Raised when a truth table cannot be parsed or has an invalid length.
class MalformedTableError : public std::invalid_argument {
 public:
  explicit MalformedTableError(const std::string &what) : std::invalid_argument(what) {}
};

}  // namespace liouville
