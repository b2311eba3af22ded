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

#include <compare>
#include <cstdint>
#include <string>

#include "polylat/common.hpp"

namespace polylat {

/// Degree of a polynomial: either a nonnegative integer or the value for the
/// zero polynomial, which compares below every integer and absorbs addition.
/// The sentinel is a first-class value; it never leaks as an encoded integer.
class Degree {
 public:
  constexpr Degree() : finite_(false), v_(0) {}
  constexpr Degree(std::int64_t v) : finite_(true), v_(v) {}  // NOLINT: implicit by design

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  constexpr std::int64_t value() const {
    if (!finite_) throw ContractViolationError("Degree::value() on -inf");
    return v_;
  }

  // (finite_, v_) with v_ pinned to 0 when infinite, so member order gives
  // the intended total order: -inf below every integer.
  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return Degree(a.v_ + b.v_);
  }

  friend constexpr Degree max(Degree a, Degree b) { return a < b ? b : a; }

  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  bool finite_;
  std::int64_t v_;
};

}  // namespace polylat
