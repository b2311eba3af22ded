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

#include <algorithm>
#include <optional>
#include <vector>

#include "polylat/vec.hpp"

namespace polylat {

namespace detail {

/// Fraction-free (Bareiss) determinant over F_q[x]. Returns the zero
/// polynomial for a singular matrix. Exact divisions throughout.
inline Poly bareiss_det(std::vector<PolyVec> m) {
  const std::size_t n = m.size();
  FieldSpec f = m[0].field();
  Poly prev = Poly::one(f);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Poly::zero(f);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = Poly::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly::zero(f);
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

/// Row triangularization by unimodular operations: combines pairs of rows
/// with xgcd coefficients until `rows` is upper triangular (entries below the
/// diagonal vanish). The same operations are applied to `track` when given.
/// Requires a nonsingular square input.
inline void triangularize(std::vector<PolyVec>& rows, std::vector<PolyVec>* track) {
  const std::size_t n = rows.size();
  const std::size_t cols = rows[0].size();
  auto apply2 = [&](std::size_t a, std::size_t b, const Poly& c00, const Poly& c01, const Poly& c10,
                    const Poly& c11) {
    // [row_a; row_b] <- [[c00 c01]; [c10 c11]] * [row_a; row_b], det = unit
    PolyVec na = c00 * rows[a] + c01 * rows[b];
    PolyVec nb = c10 * rows[a] + c11 * rows[b];
    rows[a] = std::move(na);
    rows[b] = std::move(nb);
    if (track) {
      PolyVec ta = c00 * (*track)[a] + c01 * (*track)[b];
      PolyVec tb = c10 * (*track)[a] + c11 * (*track)[b];
      (*track)[a] = std::move(ta);
      (*track)[b] = std::move(tb);
    }
  };
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < n; ++c) {
    std::size_t p = pivot_row;
    while (p < n && rows[p][c].is_zero()) ++p;
    if (p == n) continue;
    if (p != pivot_row) {
      std::swap(rows[p], rows[pivot_row]);
      if (track) std::swap((*track)[p], (*track)[pivot_row]);
    }
    for (std::size_t r = pivot_row + 1; r < n; ++r) {
      if (rows[r][c].is_zero()) continue;
      Poly::Xgcd e = Poly::xgcd(rows[pivot_row][c], rows[r][c]);
      Poly qa = Poly::exact_div(rows[pivot_row][c], e.d);
      Poly qb = Poly::exact_div(rows[r][c], e.d);
      // det = s*qa + t*qb = (s*a + t*b)/d = 1
      apply2(pivot_row, r, e.s, e.t, -qb, qa);
    }
    ++pivot_row;
  }
}

/// Rank over the fraction field, by cross-multiplication elimination.
inline std::size_t rank(std::vector<PolyVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      PolyVec next = rows[r][c] * rows[i] - rows[i][c] * rows[r];
      rows[i] = std::move(next);
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// Row basis of a full-rank lattice in F_q[x]^n. Nonsingularity is checked at
/// construction; the monic determinant is cached.
class PolyBasis {
 public:
  explicit PolyBasis(std::vector<PolyVec> rows) : rows_(std::move(rows)), det_(validate()) {}

  static PolyBasis identity(FieldSpec f, std::size_t n) {
    std::vector<PolyVec> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(PolyVec::unit(f, n, i));
    return PolyBasis(std::move(rows));
  }

  std::size_t dim() const { return rows_.size(); }
  FieldSpec field() const { return rows_[0].field(); }
  const PolyVec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<PolyVec>& rows() const { return rows_; }

  /// Monic determinant (the determinant is only defined up to units).
  const Poly& det() const { return det_; }

  Degree covol() const { return det_.degree(); }

 private:
  Poly validate() {
    const std::size_t n = rows_.size();
    if (n == 0) throw InvalidBasisError("empty basis");
    for (const PolyVec& r : rows_) {
      if (r.size() != n) throw InvalidBasisError("basis matrix must be square");
      if (!(r.field() == rows_[0].field())) throw FieldMismatchError();
      if (r.is_zero()) throw InvalidBasisError("zero row in basis");
    }
    Poly d = detail::bareiss_det(rows_);
    if (d.is_zero()) throw InvalidBasisError("rows are linearly dependent (singular matrix)");
    return d.monic();
  }

  std::vector<PolyVec> rows_;
  Poly det_;
};

/// Orthogonality defect: sum of row norms minus the covolume. Zero exactly
/// when the row norms are the successive minima.
inline std::int64_t od(const PolyBasis& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < b.dim(); ++i) s += b.row(i).norm().value();
  std::int64_t d = s - b.covol().value();
  if (d < 0) throw ContractViolationError("negative orthogonality defect");
  return d;
}

struct LatticeProfile {
  Poly det;
  Degree covol;
  std::int64_t od;
  std::vector<Degree> row_norms;  // ascending
};

inline LatticeProfile profile(const PolyBasis& b) {
  LatticeProfile p{b.det(), b.covol(), od(b), {}};
  p.row_norms.reserve(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) p.row_norms.push_back(b.row(i).norm());
  std::sort(p.row_norms.begin(), p.row_norms.end());
  return p;
}

/// Row norms of a basis with orthogonality defect 0, ascending; these are the
/// successive minima of the lattice. Rejects non-reduced input.
inline std::vector<Degree> successive_minima(const PolyBasis& b) {
  if (od(b) != 0) throw NotReducedError();
  std::vector<Degree> norms;
  norms.reserve(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) norms.push_back(b.row(i).norm());
  std::sort(norms.begin(), norms.end());
  return norms;
}

/// Coordinates of v in the basis when v lies in the lattice, else empty.
/// Solves mu * B = v through a unimodular triangularization of B.
inline std::optional<PolyVec> contains(const PolyBasis& b, const PolyVec& v) {
  const std::size_t n = b.dim();
  if (v.size() != n) throw ParamError("vector dimension does not match basis");
  if (!(v.field() == b.field())) throw FieldMismatchError();
  FieldSpec f = b.field();

  std::vector<PolyVec> tri = b.rows();
  std::vector<PolyVec> u;  // tri = u * rows
  u.reserve(n);
  for (std::size_t i = 0; i < n; ++i) u.push_back(PolyVec::unit(f, n, i));
  detail::triangularize(tri, &u);

  // Back-substitute nu * tri = v, then mu = nu * u.
  std::vector<Poly> nu(n, Poly::zero(f));
  for (std::size_t c = 0; c < n; ++c) {
    Poly acc = v[c];
    for (std::size_t i = 0; i < c; ++i) acc = acc - nu[i] * tri[i][c];
    Poly::DivRem dr = Poly::divrem(acc, tri[c][c]);
    if (!dr.rem.is_zero()) return std::nullopt;
    nu[c] = std::move(dr.quot);
  }
  PolyVec mu = PolyVec::zero(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mu[j] = mu[j] + nu[i] * u[i][j];
  return mu;
}

/// Index exponent e with [L1 : L2] = q^e, i.e. covol(L2) - covol(L1).
/// Requires L2 to be a sublattice of L1.
inline std::int64_t index_exponent(const PolyBasis& l1, const PolyBasis& l2) {
  if (l1.dim() != l2.dim()) throw ParamError("lattice dimensions differ");
  if (!(l1.field() == l2.field())) throw FieldMismatchError();
  for (std::size_t i = 0; i < l2.dim(); ++i)
    if (!contains(l1, l2.row(i))) throw NotSublatticeError();
  return l2.covol().value() - l1.covol().value();
}

}  // namespace polylat
