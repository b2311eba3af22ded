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

#include <initializer_list>
#include <vector>

#include "polylat/poly.hpp"

namespace polylat {

/// Vector in F_q[x]^n under the max-of-entry-degrees norm.
class PolyVec {
 public:
  explicit PolyVec(std::vector<Poly> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw ParamError("vector must have dimension >= 1");
    for (const Poly& p : e_)
      if (!(p.field() == e_[0].field())) throw FieldMismatchError();
  }

  PolyVec(std::initializer_list<Poly> entries) : PolyVec(std::vector<Poly>(entries)) {}

  static PolyVec zero(FieldSpec f, std::size_t n) {
    return PolyVec(std::vector<Poly>(n, Poly::zero(f)));
  }

  static PolyVec unit(FieldSpec f, std::size_t n, std::size_t i) {
    auto v = std::vector<Poly>(n, Poly::zero(f));
    v.at(i) = Poly::one(f);
    return PolyVec(std::move(v));
  }

  std::size_t size() const { return e_.size(); }
  FieldSpec field() const { return e_[0].field(); }
  const Poly& operator[](std::size_t i) const { return e_[i]; }
  Poly& operator[](std::size_t i) { return e_[i]; }

  Degree norm() const {
    Degree n = Degree::neg_inf();
    for (const Poly& p : e_) n = max(n, p.degree());
    return n;
  }

  bool is_zero() const {
    for (const Poly& p : e_)
      if (!p.is_zero()) return false;
    return true;
  }

  void add_scaled_shifted(const PolyVec& o, std::uint32_t c, std::int64_t shift) {
    check_dims(*this, o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i].add_scaled_shifted(o.e_[i], c, shift);
  }

  friend PolyVec operator+(const PolyVec& a, const PolyVec& b) {
    check_dims(a, b);
    PolyVec r = a;
    r.add_scaled_shifted(b, 1, 0);
    return r;
  }

  friend PolyVec operator-(const PolyVec& a, const PolyVec& b) {
    check_dims(a, b);
    PolyVec r = a;
    r.add_scaled_shifted(b, a.field().neg(1), 0);
    return r;
  }

  /// Entry-wise product with a scalar polynomial.
  friend PolyVec operator*(const Poly& s, const PolyVec& v) {
    PolyVec r = v;
    for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] = s * v.e_[i];
    return r;
  }

  friend bool operator==(const PolyVec& a, const PolyVec& b) { return a.e_ == b.e_; }

 private:
  static void check_dims(const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw ParamError("vector dimensions differ");
    if (!(a.field() == b.field())) throw FieldMismatchError();
  }

  std::vector<Poly> e_;
};

inline Degree vec_norm(const PolyVec& v) { return v.norm(); }

}  // namespace polylat
