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

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polylat/common.hpp"
#include "polylat/degree.hpp"
#include "polylat/field.hpp"
#include "polylat/rng.hpp"

namespace polylat {

/// Dense polynomial over F_q in canonical form (no trailing zero
/// coefficients; the zero polynomial has empty storage and degree -inf).
///
/// For q = 2 coefficients are packed 64 per machine word, so addition is a
/// word-wise XOR and the shifted-add row operation used throughout basis
/// reduction is a word blit. Other prime fields use one residue per entry;
/// they are supported for correctness work, not for speed.
class Poly {
 public:
  explicit Poly(FieldSpec f) : f_(f) {}

  static Poly zero(FieldSpec f) { return Poly(f); }

  static Poly one(FieldSpec f) { return monomial(f, 0); }

  static Poly monomial(FieldSpec f, std::int64_t exp, std::uint32_t c = 1) {
    Poly p(f);
    if (exp < 0) throw ParamError("negative exponent");
    p.set_coeff(exp, c % f.q());
    return p;
  }

  /// x^r - 1 (x^r + 1 in characteristic 2), the circulant modulus.
  static Poly x_pow_minus_one(FieldSpec f, std::int64_t r) {
    Poly p = monomial(f, r);
    p.set_coeff(0, f.neg(1));
    return p;
  }

  static Poly from_coeffs(FieldSpec f, const std::vector<std::uint32_t>& coeffs) {
    Poly p(f);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.set_coeff(static_cast<std::int64_t>(i), coeffs[i] % f.q());
    return p;
  }

  FieldSpec field() const { return f_; }

  bool is_zero() const { return f_.binary() ? bits_.empty() : cf_.empty(); }

  bool is_one() const {
    if (f_.binary()) return bits_.size() == 1 && bits_[0] == 1;
    return cf_.size() == 1 && cf_[0] == 1;
  }

  Degree degree() const {
    if (f_.binary()) {
      if (bits_.empty()) return Degree::neg_inf();
      return Degree(64 * static_cast<std::int64_t>(bits_.size() - 1) + (63 - std::countl_zero(bits_.back())));
    }
    if (cf_.empty()) return Degree::neg_inf();
    return Degree(static_cast<std::int64_t>(cf_.size()) - 1);
  }

  std::uint32_t coeff(std::int64_t i) const {
    if (i < 0) return 0;
    if (f_.binary()) {
      std::size_t w = static_cast<std::size_t>(i) / 64;
      if (w >= bits_.size()) return 0;
      return (bits_[w] >> (i % 64)) & 1u;
    }
    std::size_t idx = static_cast<std::size_t>(i);
    return idx < cf_.size() ? cf_[idx] : 0;
  }

  std::uint32_t leading_coeff() const {
    if (is_zero()) return 0;
    return coeff(degree().value());
  }

  std::uint64_t weight() const {
    if (f_.binary()) {
      std::uint64_t w = 0;
      for (std::uint64_t x : bits_) w += std::popcount(x);
      return w;
    }
    std::uint64_t w = 0;
    for (std::uint32_t c : cf_) w += (c != 0);
    return w;
  }

  /// Exponents carrying a nonzero coefficient, ascending.
  std::vector<std::int64_t> support() const {
    std::vector<std::int64_t> s;
    if (f_.binary()) {
      for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t x = bits_[w];
        while (x) {
          s.push_back(64 * static_cast<std::int64_t>(w) + std::countr_zero(x));
          x &= x - 1;
        }
      }
    } else {
      for (std::size_t i = 0; i < cf_.size(); ++i)
        if (cf_[i]) s.push_back(static_cast<std::int64_t>(i));
    }
    return s;
  }

  std::vector<std::uint32_t> coeffs() const {
    std::vector<std::uint32_t> out;
    if (f_.binary()) {
      Degree d = degree();
      if (d.is_neg_inf()) return out;
      out.resize(static_cast<std::size_t>(d.value()) + 1);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<std::int64_t>(i));
      return out;
    }
    return cf_;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.f_ == b.f_ && a.bits_ == b.bits_ && a.cf_ == b.cf_;
  }

  // ---- ring operations ----

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_fields(a, b);
    Poly r = a;
    r.add_scaled_shifted(b, 1, 0);
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    check_fields(a, b);
    Poly r = a;
    r.add_scaled_shifted(b, a.f_.neg(1), 0);
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    if (!f_.binary())
      for (auto& c : r.cf_) c = f_.neg(c);
    return r;
  }

  Poly scaled(std::uint32_t c) const {
    c %= f_.q();
    Poly r(f_);
    r.add_scaled_shifted(*this, c, 0);
    return r;
  }

  Poly shifted_up(std::int64_t k) const {
    Poly r(f_);
    r.add_scaled_shifted(*this, 1, k);
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(f_.inv(leading_coeff()));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_fields(a, b);
    Poly r(a.f_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.f_.binary()) {
      // shift-and-add over the set bits of the lighter operand
      const Poly& dense = a.weight() >= b.weight() ? a : b;
      const Poly& light = a.weight() >= b.weight() ? b : a;
      for (std::size_t w = 0; w < light.bits_.size(); ++w) {
        std::uint64_t x = light.bits_[w];
        while (x) {
          int bpos = std::countr_zero(x);
          x &= x - 1;
          r.add_scaled_shifted(dense, 1, 64 * static_cast<std::int64_t>(w) + bpos);
        }
      }
      return r;
    }
    r.cf_.assign(a.cf_.size() + b.cf_.size() - 1, 0);
    for (std::size_t i = 0; i < a.cf_.size(); ++i) {
      if (a.cf_[i] == 0) continue;
      for (std::size_t j = 0; j < b.cf_.size(); ++j)
        r.cf_[i + j] = a.f_.add(r.cf_[i + j], a.f_.mul(a.cf_[i], b.cf_[j]));
    }
    r.trim();
    return r;
  }

  /// In-place *this += c * x^shift * g. The workhorse of reduction.
  void add_scaled_shifted(const Poly& g, std::uint32_t c, std::int64_t shift) {
    check_fields(*this, g);
    if (c >= f_.q()) c %= f_.q();
    if (c == 0 || g.is_zero()) return;
    if (shift < 0) throw ParamError("negative shift");
    if (f_.binary()) {
      const std::size_t ws = static_cast<std::size_t>(shift) / 64;
      const int bs = static_cast<int>(shift % 64);
      const std::size_t need = g.bits_.size() + ws + (bs != 0 ? 1 : 0);
      if (bits_.size() < need) bits_.resize(need, 0);
      if (bs == 0) {
        for (std::size_t i = 0; i < g.bits_.size(); ++i) bits_[i + ws] ^= g.bits_[i];
      } else {
        for (std::size_t i = 0; i < g.bits_.size(); ++i) {
          std::uint64_t w = g.bits_[i];
          bits_[i + ws] ^= w << bs;
          bits_[i + ws + 1] ^= w >> (64 - bs);
        }
      }
      trim();
      return;
    }
    const std::size_t need = g.cf_.size() + static_cast<std::size_t>(shift);
    if (cf_.size() < need) cf_.resize(need, 0);
    for (std::size_t i = 0; i < g.cf_.size(); ++i) {
      std::size_t k = i + static_cast<std::size_t>(shift);
      cf_[k] = f_.add(cf_[k], f_.mul(c, g.cf_[i]));
    }
    trim();
  }

  struct DivRem;  // f = quot * g + rem, deg rem < deg g
  struct Xgcd;    // d = s*f + t*g, d the monic gcd

  /// Division with remainder: f = quot * g + rem, deg rem < deg g.
  static DivRem divrem(const Poly& f, const Poly& g);

  /// Exact quotient; remainder must vanish (internal consistency check).
  static Poly exact_div(const Poly& a, const Poly& b);

  static Xgcd xgcd(const Poly& f, const Poly& g);

  static Poly gcd(const Poly& f, const Poly& g);

  /// Inverse of f modulo m, when gcd(f, m) = 1. Empty result otherwise.
  static std::optional<Poly> inv_mod(const Poly& f, const Poly& m);

  /// Uniform polynomial of degree < r with exactly v nonzero coefficients;
  /// support drawn by a partial Fisher-Yates shuffle of {0, ..., r-1}.
  static Poly sample_sparse(FieldSpec f, std::int64_t r, std::int64_t v, Rng& rng) {
    if (r < 1 || v < 1 || v > r) throw ParamError("need 0 < v <= r");
    std::vector<std::int64_t> positions(static_cast<std::size_t>(r));
    for (std::int64_t i = 0; i < r; ++i) positions[static_cast<std::size_t>(i)] = i;
    Poly p(f);
    for (std::int64_t i = 0; i < v; ++i) {
      std::uint64_t j = i + rng.below(static_cast<std::uint64_t>(r - i));
      std::swap(positions[static_cast<std::size_t>(i)], positions[j]);
      std::uint32_t c = f.binary() ? 1 : static_cast<std::uint32_t>(1 + rng.below(f.q() - 1));
      p.set_coeff(positions[static_cast<std::size_t>(i)], c);
    }
    return p;
  }

  void set_coeff(std::int64_t i, std::uint32_t c) {
    if (i < 0) throw ParamError("negative exponent");
    c %= f_.q();
    if (f_.binary()) {
      std::size_t w = static_cast<std::size_t>(i) / 64;
      if (w >= bits_.size()) {
        if (c == 0) return;
        bits_.resize(w + 1, 0);
      }
      std::uint64_t mask = std::uint64_t{1} << (i % 64);
      if (c)
        bits_[w] |= mask;
      else
        bits_[w] &= ~mask;
      trim();
      return;
    }
    std::size_t idx = static_cast<std::size_t>(i);
    if (idx >= cf_.size()) {
      if (c == 0) return;
      cf_.resize(idx + 1, 0);
    }
    cf_[idx] = c;
    trim();
  }

 private:
  static void check_fields(const Poly& a, const Poly& b) {
    if (!(a.f_ == b.f_)) throw FieldMismatchError();
  }

  void trim() {
    if (f_.binary()) {
      while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
    } else {
      while (!cf_.empty() && cf_.back() == 0) cf_.pop_back();
    }
  }

  FieldSpec f_;
  std::vector<std::uint64_t> bits_;  // q == 2
  std::vector<std::uint32_t> cf_;    // q > 2
};

struct Poly::DivRem {
  Poly quot, rem;
};

struct Poly::Xgcd {
  Poly d, s, t;
};

inline Poly::DivRem Poly::divrem(const Poly& f, const Poly& g) {
  check_fields(f, g);
  if (g.is_zero()) throw DivisionByZeroError();
  Poly q(f.f_), r = f;
  const Degree dg = g.degree();
  const std::uint32_t lg_inv = f.f_.inv(g.leading_coeff());
  while (r.degree() >= dg) {
    const std::int64_t e = r.degree().value() - dg.value();
    const std::uint32_t c = f.f_.mul(r.leading_coeff(), lg_inv);
    q.set_coeff(e, f.f_.add(q.coeff(e), c));
    r.add_scaled_shifted(g, f.f_.neg(c), e);
  }
  return {std::move(q), std::move(r)};
}

inline Poly operator%(const Poly& a, const Poly& b) { return Poly::divrem(a, b).rem; }
inline Poly operator/(const Poly& a, const Poly& b) { return Poly::divrem(a, b).quot; }

inline Poly Poly::exact_div(const Poly& a, const Poly& b) {
  DivRem dr = divrem(a, b);
  if (!dr.rem.is_zero()) throw ContractViolationError("exact_div with nonzero remainder");
  return std::move(dr.quot);
}

inline Poly::Xgcd Poly::xgcd(const Poly& f, const Poly& g) {
  check_fields(f, g);
  if (f.is_zero() && g.is_zero()) throw ParamError("gcd of two zero polynomials");
  Poly r0 = f, r1 = g;
  Poly s0 = one(f.f_), s1 = zero(f.f_);
  Poly t0 = zero(f.f_), t1 = one(f.f_);
  while (!r1.is_zero()) {
    DivRem dr = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(dr.rem);
    Poly s2 = s0 - dr.quot * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - dr.quot * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint32_t u = f.f_.inv(r0.leading_coeff());
  return {r0.scaled(u), s0.scaled(u), t0.scaled(u)};
}

inline Poly Poly::gcd(const Poly& f, const Poly& g) { return xgcd(f, g).d; }

inline std::optional<Poly> Poly::inv_mod(const Poly& f, const Poly& m) {
  check_fields(f, m);
  if (m.degree() < Degree(1)) throw ParamError("modulus must have degree >= 1");
  if (f.is_zero()) return std::nullopt;
  Xgcd e = xgcd(f, m);
  if (!e.d.is_one()) return std::nullopt;
  return e.s % m;
}

}  // namespace polylat
