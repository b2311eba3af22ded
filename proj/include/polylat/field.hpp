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

#include "polylat/common.hpp"

namespace polylat {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Prime coefficient field F_q. Elements are residues in [0, q).
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t q) : q_(q) {
    if (!is_prime_u64(q)) throw ParamError("field cardinality must be prime");
  }

  std::uint32_t q() const { return q_; }
  bool binary() const { return q_ == 2; }

  friend bool operator==(FieldSpec a, FieldSpec b) { return a.q_ == b.q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % q_);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZeroError();
    // extended Euclid on integers
    std::int64_t t = 0, nt = 1, r = q_, nr = a;
    while (nr != 0) {
      std::int64_t qq = r / nr;
      t -= qq * nt;
      std::swap(t, nt);
      r -= qq * nr;
      std::swap(r, nr);
    }
    if (t < 0) t += q_;
    return static_cast<std::uint32_t>(t);
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

 private:
  std::uint32_t q_;
};

}  // namespace polylat
