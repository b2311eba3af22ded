// Copyright 2026 The polylat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace polylat {

// Caller passed operands over different coefficient fields.
struct FieldMismatchError : std::invalid_argument {
  FieldMismatchError() : std::invalid_argument("operands are over different fields") {}
};

struct DivisionByZeroError : std::invalid_argument {
  DivisionByZeroError() : std::invalid_argument("division by the zero polynomial") {}
};

// Bad user-supplied parameters (non-prime r, invalid weight, ...).
struct ParamError : std::invalid_argument {
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// Rows are dependent, a zero row was supplied, or the matrix is singular.
struct InvalidBasisError : std::invalid_argument {
  explicit InvalidBasisError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotReducedError : std::invalid_argument {
  NotReducedError() : std::invalid_argument("basis has nonzero orthogonality defect") {}
};

struct NotSublatticeError : std::invalid_argument {
  NotSublatticeError() : std::invalid_argument("second lattice is not contained in the first") {}
};

struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; indicates a bug, not bad input.
struct ContractViolationError : std::logic_error {
  explicit ContractViolationError(const std::string& what) : std::logic_error(what) {}
};

// Enumeration cap shared by brute-force search paths. Overridable per call;
// the POLYLAT_BUDGET environment variable replaces the built-in default.
inline std::uint64_t enum_budget_from_env() {
  static const std::uint64_t cached = [] {
    if (const char* s = std::getenv("POLYLAT_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end != s && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{1} << 24;
  }();
  return cached;
}

}  // namespace polylat
