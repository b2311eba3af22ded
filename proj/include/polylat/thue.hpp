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

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

#include "polylat/common.hpp"

namespace polylat {

using BigInt = boost::multiprecision::cpp_int;

/// Find small (a, t) with a = b t mod gamma: |a| < a_star, 0 < |t| < t_star,
/// assuming 0 < a_star < gamma < a_star * t_star.
struct ThueInstance {
  BigInt gamma, b, a_star, t_star;

  ThueInstance(BigInt gamma_, BigInt b_, BigInt a_star_, BigInt t_star_)
      : gamma(std::move(gamma_)), b(std::move(b_)), a_star(std::move(a_star_)), t_star(std::move(t_star_)) {
    if (!(0 < a_star && a_star < gamma && gamma < a_star * t_star))
      throw ParamError("need 0 < a_star < gamma < a_star * t_star");
    b %= gamma;
    if (b < 0) b += gamma;
  }
};

struct ThueSolution {
  BigInt a, t;
};

namespace detail {

// round(num / den) for den > 0, ties away from zero
inline BigInt rounded_div(const BigInt& num, const BigInt& den) {
  if (num >= 0) return BigInt((2 * num + den) / (2 * den));
  return BigInt(-((2 * (-num) + den) / (2 * den)));
}

struct IVec {
  BigInt a, t;
  friend IVec operator-(const IVec& x, const IVec& y) { return {x.a - y.a, x.t - y.t}; }
  friend IVec operator+(const IVec& x, const IVec& y) { return {x.a + y.a, x.t + y.t}; }
  IVec scaled(int c) const { return {a * c, t * c}; }
};

}  // namespace detail

/// The solution lattice {(a, t) : a - b t = 0 mod gamma} has basis (gamma, 0),
/// (b, 1) and covolume gamma < a_star * t_star, so the open box
/// |a| < a_star, |t| < t_star contains a nonzero point (Minkowski).
///
/// Rescaling coordinates by (t_star, a_star) turns the box into a square;
/// Lagrange reduction under the matching weighted inner product then leaves a
/// basis whose {-1,0,1}-combinations provably cover the box, and a slightly
/// wider window is scanned for good measure. Output is normalized to t > 0.
inline ThueSolution thue_solve(const ThueInstance& inst) {
  using detail::IVec;
  const BigInt wa = inst.t_star, wt = inst.a_star;  // coordinate weights
  auto dot = [&](const IVec& x, const IVec& y) {
    return wa * wa * x.a * y.a + wt * wt * x.t * y.t;
  };

  IVec u{inst.gamma, 0}, v{inst.b, 1};
  if (dot(v, v) < dot(u, u)) std::swap(u, v);
  for (;;) {  // Lagrange: shrink v against u until no progress
    BigInt mu = detail::rounded_div(dot(u, v), dot(u, u));
    v.a -= mu * u.a;
    v.t -= mu * u.t;
    if (dot(v, v) >= dot(u, u)) break;
    std::swap(u, v);
  }

  auto in_box = [&](const IVec& x) {
    return abs(x.a) < inst.a_star && x.t != 0 && abs(x.t) < inst.t_star;
  };
  bool have = false;
  IVec best{0, 0};
  BigInt best_norm = 0;
  for (int c1 = -2; c1 <= 2; ++c1) {
    for (int c2 = -2; c2 <= 2; ++c2) {
      if (c1 == 0 && c2 == 0) continue;
      IVec w = u.scaled(c1) + v.scaled(c2);
      if (!in_box(w)) continue;
      BigInt n = dot(w, w);
      if (!have || n < best_norm) {
        have = true;
        best = std::move(w);
        best_norm = std::move(n);
      }
    }
  }
  if (!have) throw ContractViolationError("no lattice point found in the solution box");
  if (best.t < 0) {
    best.a = -best.a;
    best.t = -best.t;
  }
  if ((best.a - inst.b * best.t) % inst.gamma != 0)
    throw ContractViolationError("candidate escaped the solution lattice");
  return ThueSolution{std::move(best.a), std::move(best.t)};
}

/// Covolume of {(a, t) : a - b t = 0 mod gamma} from its explicit basis
/// {(gamma, 0), (b, 1)}, with the rank-1 congruence bound gamma^1.
inline std::pair<BigInt, BigInt> int_qary_covol(const BigInt& b, const BigInt& gamma) {
  if (gamma < 1) throw ParamError("gamma must be positive");
  (void)b;  // the determinant gamma*1 - b*0 does not depend on b
  BigInt covol = gamma;
  BigInt bound = gamma;
  if (covol > bound) throw ContractViolationError("covolume exceeds gamma");
  return {std::move(covol), std::move(bound)};
}

}  // namespace polylat
