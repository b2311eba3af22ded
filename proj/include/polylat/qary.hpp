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

#include <utility>
#include <vector>

#include "polylat/reduce.hpp"

namespace polylat {

/// Instance of the congruence lattice {a in F_q[x]^n : A a = 0 mod g}.
struct QaryInstance {
  std::vector<std::vector<Poly>> mat;  // k x n
  Poly modulus;                        // g, deg >= 1

  QaryInstance(std::vector<std::vector<Poly>> a, Poly g) : mat(std::move(a)), modulus(std::move(g)) {
    if (mat.empty() || mat[0].empty()) throw ParamError("matrix must be nonempty");
    const std::size_t n = mat[0].size();
    if (mat.size() > n) throw ParamError("need k <= n");
    for (const auto& row : mat) {
      if (row.size() != n) throw ParamError("ragged matrix");
      for (const Poly& p : row)
        if (!(p.field() == modulus.field())) throw FieldMismatchError();
    }
    if (modulus.degree() < Degree(1)) throw ParamError("modulus must have degree >= 1");
  }

  std::size_t k() const { return mat.size(); }
  std::size_t n() const { return mat[0].size(); }
  FieldSpec field() const { return modulus.field(); }
};

/// Reduced basis of the congruence lattice. a is a solution exactly when
/// A a = g y for some y, so the lattice is the projection (onto the first n
/// coordinates) of the kernel of [A | -g I_k]; the projection is injective
/// because g(y - y') = 0 forces y = y'. The kernel basis comes from a
/// unimodular triangularization of the transposed matrix, and every emitted
/// row is re-verified against the congruence directly.
inline PolyBasis qary_basis(const QaryInstance& inst) {
  const std::size_t k = inst.k();
  const std::size_t n = inst.n();
  const std::size_t m = n + k;
  FieldSpec f = inst.field();

  // rows of `stacked` are the columns of [A | -g I_k]
  std::vector<PolyVec> stacked;
  stacked.reserve(m);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Poly> col;
    col.reserve(k);
    for (std::size_t r = 0; r < k; ++r) col.push_back(inst.mat[r][c]);
    stacked.push_back(PolyVec(std::move(col)));
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Poly> col(k, Poly::zero(f));
    col[c] = -inst.modulus;
    stacked.push_back(PolyVec(std::move(col)));
  }

  std::vector<PolyVec> track;
  track.reserve(m);
  for (std::size_t i = 0; i < m; ++i) track.push_back(PolyVec::unit(f, m, i));
  detail::triangularize(stacked, &track);

  // the -g I_k block has rank k, so exactly the last n tracked rows are kernel
  std::vector<PolyVec> basis_rows;
  basis_rows.reserve(n);
  for (std::size_t i = k; i < m; ++i) {
    if (!stacked[i].is_zero())
      throw ContractViolationError("kernel extraction left a nonzero residual row");
    std::vector<Poly> a;
    a.reserve(n);
    for (std::size_t j = 0; j < n; ++j) a.push_back(track[i][j]);
    basis_rows.push_back(PolyVec(std::move(a)));
  }

  for (const PolyVec& row : basis_rows) {
    for (std::size_t r = 0; r < k; ++r) {
      Poly acc = Poly::zero(f);
      for (std::size_t j = 0; j < n; ++j) acc = acc + inst.mat[r][j] * row[j];
      if (!(acc % inst.modulus).is_zero())
        throw ContractViolationError("constructed row violates the congruence");
    }
  }

  return reduce(PolyBasis(std::move(basis_rows))).reduced.basis();
}

/// (covol of the congruence lattice, |g| * k). The first never exceeds the
/// second; equality holds e.g. for A = (I_k | 0).
inline std::pair<Degree, std::int64_t> covol_bound_check(const QaryInstance& inst) {
  Degree covol = qary_basis(inst).covol();
  const std::int64_t bound = inst.modulus.degree().value() * static_cast<std::int64_t>(inst.k());
  if (covol > Degree(bound)) throw ContractViolationError("covolume exceeds the q-ary bound");
  return {covol, bound};
}

}  // namespace polylat
