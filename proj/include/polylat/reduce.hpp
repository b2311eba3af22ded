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
#include <cstdint>
#include <numeric>
#include <vector>

#include "polylat/basis.hpp"

namespace polylat {

struct ReductionStats {
  std::int64_t steps = 0;       // improving row operations; always <= initial_od
  std::int64_t initial_od = 0;
  std::uint64_t row_adds = 0;   // shifted-add row updates performed
};

/// Basis with orthogonality defect 0, rows in ascending norm order, together
/// with the unimodular transform that produced it from the source basis.
class ReducedBasis {
 public:
  const PolyBasis& basis() const { return basis_; }
  const std::vector<PolyVec>& transform() const { return transform_; }
  Degree source_covol() const { return source_covol_; }

  /// Row norms ascending; by Lenstra's theorem these are the successive
  /// minima of the lattice.
  std::vector<Degree> minima() const {
    std::vector<Degree> m;
    m.reserve(basis_.dim());
    for (std::size_t i = 0; i < basis_.dim(); ++i) m.push_back(basis_.row(i).norm());
    return m;
  }

  /// Determinant of the transform; normalized to exactly 1.
  Poly transform_det() const { return detail::bareiss_det(transform_); }

 private:
  friend struct ReduceAccess;
  ReducedBasis(PolyBasis basis, std::vector<PolyVec> transform, Degree source_covol)
      : basis_(std::move(basis)), transform_(std::move(transform)), source_covol_(source_covol) {}

  PolyBasis basis_;
  std::vector<PolyVec> transform_;
  Degree source_covol_;
};

struct ReduceResult {
  ReducedBasis reduced;
  ReductionStats stats;
};

struct ReduceAccess {
  static ReducedBasis make(PolyBasis basis, std::vector<PolyVec> transform, Degree source_covol) {
    return ReducedBasis(std::move(basis), std::move(transform), std::move(source_covol));
  }
};

/// Transform a basis into one with orthogonality defect 0.
///
/// Loop invariant: rows stay a basis of the same lattice (every operation is
/// unimodular). Each pass inspects the leading-coefficient vectors -- for row
/// b_i, the vector in F_q^n whose j-th entry is the coefficient of x^{|b_i|}
/// in b_ij. While those are dependent over F_q, a dependency c gives a row
/// operation b_k <- b_k + sum_j (c_j/c_k) x^{|b_k|-|b_j|} b_j on the row of
/// largest norm in its support, which strictly lowers |b_k|. Independence of
/// the leading vectors is exactly OD = 0. Since sum |b_i| is bounded below by
/// the covolume, the loop runs at most OD(input) times.
inline ReduceResult reduce(const PolyBasis& input) {
  const std::size_t n = input.dim();
  const FieldSpec f = input.field();
  const std::uint32_t q = f.q();
  const Degree source_covol = input.covol();

  std::vector<PolyVec> rows = input.rows();
  std::vector<PolyVec> transform;
  transform.reserve(n);
  for (std::size_t i = 0; i < n; ++i) transform.push_back(PolyVec::unit(f, n, i));

  std::vector<std::int64_t> norms(n);
  for (std::size_t i = 0; i < n; ++i) norms[i] = rows[i].norm().value();

  ReductionStats stats;
  stats.initial_od = std::accumulate(norms.begin(), norms.end(), std::int64_t{0}) - source_covol.value();

  // rank-2 binary fast path: the leading vectors are nonzero bit pairs, so
  // they are dependent exactly when equal, and the dependency is (1, 1)
  if (n == 2 && q == 2) {
    for (;;) {
      const bool eq0 = (rows[0][0].coeff(norms[0]) != 0) == (rows[1][0].coeff(norms[1]) != 0);
      const bool eq1 = (rows[0][1].coeff(norms[0]) != 0) == (rows[1][1].coeff(norms[1]) != 0);
      if (!(eq0 && eq1)) break;
      const std::size_t k = norms[0] >= norms[1] ? 0 : 1;
      const std::size_t j = 1 - k;
      const std::int64_t shift = norms[k] - norms[j];
      rows[k].add_scaled_shifted(rows[j], 1, shift);
      transform[k].add_scaled_shifted(transform[j], 1, shift);
      ++stats.row_adds;
      const Degree updated = rows[k].norm();
      if (!(updated < Degree(norms[k])))
        throw ContractViolationError("row operation failed to lower the row norm");
      norms[k] = updated.value();
      ++stats.steps;
    }
  }

  // scratch for the F_q elimination
  std::vector<std::uint32_t> lc(n * n), tr(n * n);

  for (;;) {
    // leading-coefficient matrix
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lc[i * n + j] = rows[i][j].coeff(norms[i]);

    // left kernel of lc over F_q: row-reduce, keep the transform; the first
    // zero row of the echelon form exposes a dependency.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) tr[i * n + j] = (i == j) ? 1 : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
      std::size_t p = rank;
      while (p < n && lc[p * n + col] == 0) ++p;
      if (p == n) continue;
      if (p != rank) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(lc[p * n + j], lc[rank * n + j]);
          std::swap(tr[p * n + j], tr[rank * n + j]);
        }
      }
      const std::uint32_t piv_inv = f.inv(lc[rank * n + col]);
      for (std::size_t i = rank + 1; i < n; ++i) {
        if (lc[i * n + col] == 0) continue;
        const std::uint32_t lam = f.mul(lc[i * n + col], piv_inv);
        for (std::size_t j = 0; j < n; ++j) {
          lc[i * n + j] = f.sub(lc[i * n + j], f.mul(lam, lc[rank * n + j]));
          tr[i * n + j] = f.sub(tr[i * n + j], f.mul(lam, tr[rank * n + j]));
        }
      }
      ++rank;
    }
    if (rank == n) break;  // leading vectors independent: OD = 0

    const std::uint32_t* dep = &tr[rank * n];  // dependency coefficients

    // reduce the supported row of largest norm (lowest index on ties)
    std::size_t k = n;
    for (std::size_t j = 0; j < n; ++j)
      if (dep[j] != 0 && (k == n || norms[j] > norms[k])) k = j;
    const std::uint32_t ck_inv = f.inv(dep[k]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || dep[j] == 0) continue;
      const std::uint32_t c = q == 2 ? 1 : f.mul(dep[j], ck_inv);
      const std::int64_t shift = norms[k] - norms[j];
      rows[k].add_scaled_shifted(rows[j], c, shift);
      transform[k].add_scaled_shifted(transform[j], c, shift);
      ++stats.row_adds;
    }
    const Degree updated = rows[k].norm();
    if (!(updated < Degree(norms[k])))
      throw ContractViolationError("row operation failed to lower the row norm");
    if (rows[k].is_zero()) throw ContractViolationError("row operation produced a zero row");
    norms[k] = updated.value();
    ++stats.steps;
  }

  // stable ascending sort by (norm, original index)
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return norms[a] < norms[b]; });
  std::vector<PolyVec> sorted_rows, sorted_transform;
  sorted_rows.reserve(n);
  sorted_transform.reserve(n);
  for (std::size_t i : order) {
    sorted_rows.push_back(std::move(rows[i]));
    sorted_transform.push_back(std::move(transform[i]));
  }

  if (q != 2) {
    // swaps and scalings can leave det(transform) at a unit != 1; pin it to 1
    Poly du = detail::bareiss_det(sorted_transform);
    if (du.is_zero() || du.degree() != Degree(0))
      throw ContractViolationError("transform determinant is not a unit");
    const std::uint32_t u_inv = f.inv(du.leading_coeff());
    if (u_inv != 1) {
      for (std::size_t j = 0; j < n; ++j) {
        sorted_rows[0][j] = sorted_rows[0][j].scaled(u_inv);
        sorted_transform[0][j] = sorted_transform[0][j].scaled(u_inv);
      }
    }
  }

  PolyBasis reduced_basis(std::move(sorted_rows));
  if (!(reduced_basis.covol() == source_covol))
    throw ContractViolationError("reduction changed the covolume");
  if (od(reduced_basis) != 0) throw ContractViolationError("reduction left a nonzero defect");

  return {ReduceAccess::make(std::move(reduced_basis), std::move(sorted_transform), source_covol),
          stats};
}

/// First row of the reduced basis: a vector attaining the first minimum.
inline PolyVec shortest_vector(const PolyBasis& b) {
  return reduce(b).reduced.basis().row(0);
}

namespace detail {

inline std::uint64_t pow_clamped(std::uint64_t base, std::uint64_t exp, std::uint64_t clamp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > clamp / base) return clamp + 1;
    r *= base;
  }
  return r;
}

}  // namespace detail

/// Exhaustive successive-minima oracle for small instances. Enumerates every
/// lattice vector of norm <= bound (coefficient degrees are capped through
/// Cramer's rule: deg mu_i <= bound + OD - |b_i|) and extracts the minima
/// greedily with exact independence checks. Intended as an independent check
/// on `reduce`; refuses instances whose nominal enumeration exceeds `budget`.
inline std::vector<Degree> brute_force_minima(const PolyBasis& b, Degree bound,
                                              std::uint64_t budget = enum_budget_from_env()) {
  const std::size_t n = b.dim();
  const FieldSpec f = b.field();
  const std::uint32_t q = f.q();
  if (bound.is_neg_inf()) return {};
  const std::int64_t bnd = bound.value();

  const std::uint64_t nominal =
      detail::pow_clamped(q, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(bnd + 1), budget);
  if (nominal > budget)
    throw BudgetExceededError("enumeration budget exceeded: q^(n*(bound+1)) > budget");

  const std::int64_t defect = od(b);
  std::vector<std::int64_t> caps(n);
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    caps[i] = bnd + defect - b.row(i).norm().value();
    const std::uint64_t digits = caps[i] >= 0 ? static_cast<std::uint64_t>(caps[i]) + 1 : 0;
    box = box > budget / detail::pow_clamped(q, digits, budget) ? budget + 1
                                                                : box * detail::pow_clamped(q, digits, budget);
    if (box > budget) throw BudgetExceededError("enumeration budget exceeded");
  }

  // odometer over the coefficient digits of mu; each digit increment is one
  // shifted add of a basis row, so wrapping q -> 0 is automatic mod q
  struct Digit {
    std::size_t row;
    std::int64_t pos;
    std::uint32_t val;
  };
  std::vector<Digit> digits;
  for (std::size_t i = 0; i < n; ++i)
    for (std::int64_t p = 0; p <= caps[i]; ++p) digits.push_back({i, p, 0});

  std::vector<std::pair<Degree, PolyVec>> found;
  PolyVec cur = PolyVec::zero(f, n);
  if (!digits.empty()) {
    for (;;) {
      std::size_t i = 0;
      for (;;) {
        if (i == digits.size()) goto done;
        Digit& d = digits[i];
        cur.add_scaled_shifted(b.row(d.row), 1, d.pos);
        if (++d.val == q) {
          d.val = 0;
          ++i;
          continue;
        }
        break;
      }
      Degree norm = cur.norm();
      if (norm <= bound && !cur.is_zero()) found.emplace_back(norm, cur);
    }
  }
done:

  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b2) { return a.first < b2.first; });
  std::vector<Degree> minima;
  std::vector<PolyVec> independent;
  for (auto& [norm, vec] : found) {
    if (independent.size() == n) break;
    independent.push_back(vec);
    if (detail::rank(independent) == independent.size()) {
      minima.push_back(norm);
    } else {
      independent.pop_back();
    }
  }
  return minima;
}

}  // namespace polylat
