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

#include "polylat/qary.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace polylat;

namespace {

const FieldSpec kF2(2);
const FieldSpec kF3(3);

bool same_lattice(const PolyBasis& a, const PolyBasis& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!contains(b, a.row(i))) return false;
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!contains(a, b.row(i))) return false;
  return true;
}

QaryInstance random_instance(FieldSpec f, Rng& rng, std::size_t k, std::size_t n,
                             std::int64_t g_deg) {
  std::vector<std::vector<Poly>> mat(k);
  for (auto& row : mat) {
    row.clear();
    for (std::size_t j = 0; j < n; ++j) row.push_back(testutil::random_poly(f, rng, g_deg));
  }
  Poly g = Poly::monomial(f, g_deg);
  if (g_deg > 0) g = g + testutil::random_poly(f, rng, g_deg - 1);
  return QaryInstance(std::move(mat), std::move(g));
}

TEST(Qary, IdentityBlockEqualityCase) {
  // A = (I_k | 0): lattice is (g F^k) x F^{n-k}, covolume |g| * k exactly
  for (const FieldSpec& f : {kF2, kF3}) {
    Poly g = Poly::x_pow_minus_one(f, 4);
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::size_t n = 3;
      std::vector<std::vector<Poly>> mat(k, std::vector<Poly>(n, Poly::zero(f)));
      for (std::size_t i = 0; i < k && i < n; ++i) mat[i][i] = Poly::one(f);
      QaryInstance inst(mat, g);
      PolyBasis basis = qary_basis(inst);

      std::vector<PolyVec> expected_rows;
      for (std::size_t i = 0; i < n; ++i) {
        PolyVec row = PolyVec::zero(f, n);
        row[i] = i < k ? g : Poly::one(f);
        expected_rows.push_back(std::move(row));
      }
      PolyBasis expected(expected_rows);
      EXPECT_TRUE(same_lattice(basis, expected));

      auto [covol, bound] = covol_bound_check(inst);
      EXPECT_EQ(covol, Degree(bound));
      EXPECT_EQ(bound, 4 * static_cast<std::int64_t>(k));
    }
  }
}

TEST(Qary, PublicKeyRowMatchesCirculantLattice) {
  // A = (1, -h), g = x^r - 1 spans the same lattice as {(x^r-1, 0), (h, 1)}
  Rng rng(113);
  for (int rep = 0; rep < 10; ++rep) {
    const std::int64_t r = 11;
    Poly h = testutil::random_poly(kF2, rng, r - 1);
    QaryInstance inst({{Poly::one(kF2), -h}}, Poly::x_pow_minus_one(kF2, r));
    PolyBasis qb = qary_basis(inst);
    PolyBasis direct({PolyVec{Poly::x_pow_minus_one(kF2, r), Poly::zero(kF2)},
                      PolyVec{h, Poly::one(kF2)}});
    EXPECT_TRUE(same_lattice(qb, direct));
    auto [covol, bound] = covol_bound_check(inst);
    EXPECT_EQ(covol, Degree(r));
    EXPECT_EQ(bound, r);
  }
}

TEST(Qary, ZeroMatrixGivesFullLattice) {
  QaryInstance inst({{Poly::zero(kF2), Poly::zero(kF2), Poly::zero(kF2)}},
                    Poly::x_pow_minus_one(kF2, 3));
  PolyBasis basis = qary_basis(inst);
  EXPECT_EQ(basis.covol(), Degree(0));
  EXPECT_TRUE(same_lattice(basis, PolyBasis::identity(kF2, 3)));
}

TEST(Qary, SoundnessOnRandomInstances) {
  Rng rng(127);
  for (const FieldSpec& f : {kF2, kF3}) {
    for (int rep = 0; rep < 40; ++rep) {
      const std::size_t n = 2 + rng.below(2);
      const std::size_t k = 1 + rng.below(n);
      QaryInstance inst = random_instance(f, rng, k, n, 3 + rng.below(3));
      PolyBasis basis = qary_basis(inst);
      EXPECT_EQ(od(basis), 0);  // emitted basis is reduced
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t row = 0; row < k; ++row) {
          Poly acc = Poly::zero(f);
          for (std::size_t j = 0; j < n; ++j) acc = acc + inst.mat[row][j] * basis.row(i)[j];
          EXPECT_TRUE((acc % inst.modulus).is_zero());
        }
      }
    }
  }
}

TEST(Qary, CompletenessOnSmallInstances) {
  // every residue vector (deg a_i < deg g) solving the congruence must lie in
  // the constructed lattice
  Rng rng(131);
  for (int rep = 0; rep < 15; ++rep) {
    const std::size_t n = 2 + rng.below(2);
    const std::size_t k = 1 + rng.below(n);
    const std::int64_t dg = 2 + static_cast<std::int64_t>(rng.below(3));  // deg g <= 4
    QaryInstance inst = random_instance(kF2, rng, k, n, dg);
    PolyBasis basis = qary_basis(inst);

    const std::uint64_t per = std::uint64_t{1} << dg;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= per;
    std::uint64_t in_lattice = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      std::vector<Poly> entries;
      for (std::size_t i = 0; i < n; ++i) {
        Poly p(kF2);
        std::uint64_t bits = c % per;
        c /= per;
        for (std::int64_t bit = 0; bit < dg; ++bit)
          if (bits & (std::uint64_t{1} << bit)) p.set_coeff(bit, 1);
        entries.push_back(std::move(p));
      }
      PolyVec a(entries);
      bool solves = true;
      for (std::size_t row = 0; row < k && solves; ++row) {
        Poly acc = Poly::zero(kF2);
        for (std::size_t j = 0; j < n; ++j) acc = acc + inst.mat[row][j] * a[j];
        solves = (acc % inst.modulus).is_zero();
      }
      if (!solves) continue;
      ++in_lattice;
      EXPECT_TRUE(contains(basis, a).has_value());
    }
    EXPECT_GE(in_lattice, 1u);  // at least the zero vector
  }
}

TEST(Qary, CovolBoundOnRandomInstances) {
  Rng rng(137);
  for (const FieldSpec& f : {kF2, kF3}) {
    for (int rep = 0; rep < 50; ++rep) {
      const std::size_t n = 2 + rng.below(2);
      const std::size_t k = 1 + rng.below(n);
      QaryInstance inst = random_instance(f, rng, k, n, 1 + rng.below(5));
      auto [covol, bound] = covol_bound_check(inst);
      EXPECT_LE(covol.value(), bound);
    }
  }
}

TEST(Qary, InstanceValidation) {
  EXPECT_THROW(QaryInstance({{Poly::one(kF2)}, {Poly::one(kF2)}}, Poly::x_pow_minus_one(kF2, 2)),
               ParamError);  // k > n
  EXPECT_THROW(QaryInstance({{Poly::one(kF2)}}, Poly::one(kF2)), ParamError);  // deg g = 0
}

}  // namespace
