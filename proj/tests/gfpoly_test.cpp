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

#include "polylat/poly.hpp"

#include <gtest/gtest.h>

#include "polylat/encoding.hpp"
#include "test_util.hpp"

using namespace polylat;
using testutil::ref_add;
using testutil::ref_divrem;
using testutil::ref_from;
using testutil::ref_mul;
using testutil::ref_to;

namespace {

const FieldSpec kF2(2);
const FieldSpec kF3(3);
const FieldSpec kF5(5);

Poly p2(std::initializer_list<std::uint32_t> coeffs) {
  return Poly::from_coeffs(kF2, std::vector<std::uint32_t>(coeffs));
}

TEST(Degree, NegInfOrderingAndAbsorption) {
  Degree ninf = Degree::neg_inf();
  EXPECT_TRUE(ninf < Degree(0));
  EXPECT_TRUE(ninf < Degree(-5));
  EXPECT_TRUE(ninf == Degree::neg_inf());
  EXPECT_EQ(ninf + Degree(7), Degree::neg_inf());
  EXPECT_EQ(Degree(7) + ninf, Degree::neg_inf());
  EXPECT_EQ(Degree(3) + Degree(4), Degree(7));
  EXPECT_EQ(max(ninf, Degree(2)), Degree(2));
  EXPECT_EQ(max(Degree(5), Degree(2)), Degree(5));
  EXPECT_THROW(ninf.value(), ContractViolationError);
  EXPECT_EQ(ninf.str(), "-inf");
}

TEST(FieldSpec, RejectsNonPrime) {
  EXPECT_THROW(FieldSpec(4), ParamError);
  EXPECT_THROW(FieldSpec(1), ParamError);
  EXPECT_NO_THROW(FieldSpec(101));
}

TEST(Poly, CanonicalForm) {
  EXPECT_TRUE(Poly::zero(kF2).is_zero());
  EXPECT_TRUE(Poly::zero(kF2).degree().is_neg_inf());
  Poly p = Poly::from_coeffs(kF3, {1, 2, 0, 0});
  EXPECT_EQ(p.degree(), Degree(1));
  // cancellation must re-canonicalize
  Poly a = p2({1, 0, 1});  // x^2 + 1
  Poly b = p2({0, 1, 1});  // x^2 + x
  EXPECT_EQ((a + b).degree(), Degree(1));
}

TEST(Poly, AddExamples) {
  EXPECT_EQ(p2({1, 0, 1}) + p2({0, 1, 1}), p2({1, 1}));  // leading terms cancel
  Poly f = p2({1, 1, 0, 1});
  EXPECT_EQ(f + Poly::zero(kF2), f);
  Poly g3 = Poly::from_coeffs(kF3, {1, 2});  // 2x + 1
  Poly h3 = Poly::from_coeffs(kF3, {2, 1});  // x + 2
  EXPECT_TRUE((g3 + h3).is_zero());
}

TEST(Poly, FieldMismatchRejected) {
  EXPECT_THROW(p2({1}) + Poly::one(kF3), FieldMismatchError);
  EXPECT_THROW(p2({1}) * Poly::one(kF3), FieldMismatchError);
}

TEST(Poly, MulExamples) {
  Poly f = p2({1, 1, 0, 1});
  EXPECT_EQ(f * Poly::one(kF2), f);
  Poly z = f * Poly::zero(kF2);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.degree().is_neg_inf());

  // (x+1)(x^2+x) = x^3+x, checked both against schoolbook convolution and by
  // evaluation at every point of GF(4)
  Poly a = p2({1, 1});
  Poly b = p2({0, 1, 1});
  Poly prod = a * b;
  EXPECT_EQ(prod, p2({0, 1, 0, 1}));
  EXPECT_EQ(ref_from(prod), ref_mul(ref_from(a), ref_from(b), 2));
  for (std::uint32_t x = 0; x < 4; ++x)
    EXPECT_EQ(testutil::Gf4::eval(prod, x),
              testutil::Gf4::mul(testutil::Gf4::eval(a, x), testutil::Gf4::eval(b, x)));
}

TEST(Poly, MulDegreeAdds) {
  Rng rng(7);
  for (const FieldSpec& f : {kF2, kF3}) {
    for (int i = 0; i < 200; ++i) {
      Poly a = testutil::random_poly(f, rng, 40);
      Poly b = testutil::random_poly(f, rng, 40);
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(Poly, MulMatchesReferenceOnWordBoundaries) {
  Rng rng(8);
  // degrees straddling the 64-coefficient word boundary
  for (std::int64_t d : {1, 62, 63, 64, 65, 127, 128, 200}) {
    for (int i = 0; i < 20; ++i) {
      Poly a = testutil::random_poly(kF2, rng, d);
      Poly b = testutil::random_poly(kF2, rng, d);
      EXPECT_EQ(ref_from(a * b), ref_mul(ref_from(a), ref_from(b), 2));
      EXPECT_EQ(ref_from(a + b), ref_add(ref_from(a), ref_from(b), 2));
    }
  }
}

TEST(Poly, DivRemExamples) {
  // x^3+x+1 = (x+1)(x^2+x) + 1
  auto dr = Poly::divrem(p2({1, 1, 0, 1}), p2({1, 1}));
  EXPECT_EQ(dr.quot, p2({0, 1, 1}));
  EXPECT_EQ(dr.rem, p2({1}));

  Rng rng(3);
  Poly f = testutil::random_poly(kF3, rng, 10);
  auto d1 = Poly::divrem(f, Poly::one(kF3));
  EXPECT_EQ(d1.quot, f);
  EXPECT_TRUE(d1.rem.is_zero());

  Poly g = p2({1, 0, 1, 1});
  auto dg = Poly::divrem(g, g);
  EXPECT_TRUE(dg.quot.is_one());
  EXPECT_TRUE(dg.rem.is_zero());

  EXPECT_THROW(Poly::divrem(g, Poly::zero(kF2)), DivisionByZeroError);
}

TEST(Poly, DivRemIdentityProperty) {
  Rng rng(11);
  for (const FieldSpec& f : {kF2, kF3, kF5}) {
    for (int i = 0; i < 300; ++i) {
      Poly a = testutil::random_poly(f, rng, 30);
      Poly b = testutil::random_poly(f, rng, 12, /*allow_zero=*/false);
      auto dr = Poly::divrem(a, b);
      EXPECT_EQ(dr.quot * b + dr.rem, a);
      EXPECT_TRUE(dr.rem.degree() < b.degree());
      auto ref = ref_divrem(ref_from(a), ref_from(b), f.q());
      EXPECT_EQ(ref_from(dr.quot), ref.first);
      EXPECT_EQ(ref_from(dr.rem), ref.second);
    }
  }
}

TEST(Poly, RingAxiomsOnRandomTriples) {
  Rng rng(13);
  for (const FieldSpec& f : {kF2, kF3, kF5}) {
    for (int i = 0; i < 100; ++i) {
      Poly a = testutil::random_poly(f, rng, 20);
      Poly b = testutil::random_poly(f, rng, 20);
      Poly c = testutil::random_poly(f, rng, 20);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Poly, UltrametricDegree) {
  Rng rng(17);
  for (const FieldSpec& f : {kF2, kF3}) {
    for (int i = 0; i < 300; ++i) {
      Poly a = testutil::random_poly(f, rng, 25);
      Poly b = testutil::random_poly(f, rng, 25);
      EXPECT_TRUE((a + b).degree() <= max(a.degree(), b.degree()));
      if (a.degree() != b.degree()) {
        EXPECT_EQ((a + b).degree(), max(a.degree(), b.degree()));
      }
    }
  }
}

TEST(Poly, XgcdExamples) {
  Poly f = Poly::from_coeffs(kF3, {2, 0, 2});  // lc = 2, so s must be lc^-1 = 2
  auto e0 = Poly::xgcd(f, Poly::zero(kF3));
  EXPECT_EQ(e0.d, f.monic());
  EXPECT_TRUE(e0.t.is_zero());
  EXPECT_EQ(e0.s, Poly::from_coeffs(kF3, {2}));
  EXPECT_EQ(e0.s * f, e0.d);

  // x^2+1 = (x+1)^2 over F_2
  auto e1 = Poly::xgcd(p2({1, 0, 1}), p2({1, 1}));
  EXPECT_EQ(e1.d, p2({1, 1}));
  EXPECT_TRUE(e1.s.is_zero());
  EXPECT_TRUE(e1.t.is_one());

  EXPECT_THROW(Poly::xgcd(Poly::zero(kF2), Poly::zero(kF2)), ParamError);
}

TEST(Poly, XgcdBezoutProperty) {
  Rng rng(19);
  for (const FieldSpec& f : {kF2, kF3, kF5}) {
    for (int i = 0; i < 200; ++i) {
      Poly a = testutil::random_poly(f, rng, 20);
      Poly b = testutil::random_poly(f, rng, 20);
      if (a.is_zero() && b.is_zero()) continue;
      auto e = Poly::xgcd(a, b);
      EXPECT_EQ(e.s * a + e.t * b, e.d);
      EXPECT_EQ(e.d.leading_coeff(), 1u);
      if (!a.is_zero()) {
        EXPECT_TRUE(Poly::divrem(a, e.d).rem.is_zero());
      }
      if (!b.is_zero()) {
        EXPECT_TRUE(Poly::divrem(b, e.d).rem.is_zero());
      }
    }
  }
}

TEST(Poly, InvModExamples) {
  Poly m = p2({1, 0, 0, 1});  // x^3 + 1
  auto i1 = Poly::inv_mod(p2({0, 1}), m);
  ASSERT_TRUE(i1.has_value());
  EXPECT_EQ(*i1, p2({0, 0, 1}));  // x * x^2 = x^3 = 1 mod x^3+1
  EXPECT_TRUE(((*i1 * p2({0, 1})) % m).is_one());

  auto i2 = Poly::inv_mod(Poly::one(kF2), m);
  ASSERT_TRUE(i2.has_value());
  EXPECT_TRUE(i2->is_one());

  EXPECT_FALSE(Poly::inv_mod(p2({1, 1}), m).has_value());  // x+1 divides x^3+1
  EXPECT_THROW(Poly::inv_mod(p2({1}), Poly::one(kF2)), ParamError);
}

TEST(Poly, InvModIffCoprime) {
  Rng rng(23);
  for (const FieldSpec& f : {kF2, kF3}) {
    for (int i = 0; i < 200; ++i) {
      Poly a = testutil::random_poly(f, rng, 15);
      Poly m = testutil::random_poly(f, rng, 10, /*allow_zero=*/false);
      if (m.degree() < Degree(1)) continue;
      auto inv = Poly::inv_mod(a, m);
      bool coprime = !a.is_zero() && Poly::gcd(a, m).is_one();
      EXPECT_EQ(inv.has_value(), coprime);
      if (inv) {
        EXPECT_TRUE(((*inv * a) % m).is_one());
      }
    }
  }
}

TEST(Poly, WeightExamples) {
  EXPECT_EQ(Poly::zero(kF2).weight(), 0u);
  EXPECT_EQ(Poly::x_pow_minus_one(kF2, 90).weight(), 2u);
  EXPECT_EQ(Poly::x_pow_minus_one(kF5, 7).weight(), 2u);
  EXPECT_EQ(p2({1, 0, 1, 0, 0, 1}).weight(), 3u);
}

TEST(Poly, SampleSparseWeightAndRange) {
  Rng rng(29);
  for (auto [r, v] : {std::pair<std::int64_t, std::int64_t>{10, 3}, {64, 10}, {101, 9}, {65, 1}}) {
    for (int i = 0; i < 50; ++i) {
      Poly p = Poly::sample_sparse(kF2, r, v, rng);
      EXPECT_EQ(p.weight(), static_cast<std::uint64_t>(v));
      EXPECT_TRUE(p.degree() < Degree(r));
    }
  }
  // forced: v = r over F_2 gives the all-ones polynomial
  Poly all = Poly::sample_sparse(kF2, 9, 9, rng);
  EXPECT_EQ(all.weight(), 9u);
  EXPECT_EQ(all.degree(), Degree(8));
  EXPECT_THROW(Poly::sample_sparse(kF2, 5, 6, rng), ParamError);

  // q > 2: nonzero coefficients uniform over F_q^x
  Poly s5 = Poly::sample_sparse(kF5, 40, 7, rng);
  EXPECT_EQ(s5.weight(), 7u);
}

TEST(Poly, SampleSparseUniformSupport) {
  // chi-square over support positions: 1e5 draws of weight 5 out of 50
  Rng rng(31);
  constexpr int kDraws = 100000;
  constexpr std::int64_t r = 50, v = 5;
  std::vector<std::int64_t> counts(r, 0);
  for (int i = 0; i < kDraws; ++i) {
    Poly p = Poly::sample_sparse(kF2, r, v, rng);
    for (std::int64_t e : p.support()) counts[static_cast<std::size_t>(e)]++;
  }
  const double expected = static_cast<double>(kDraws) * v / r;
  double chi2 = 0;
  for (std::int64_t c : counts) {
    double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  // df = 49: mean 49, sigma = sqrt(98); allow five sigma
  EXPECT_LT(chi2, 49 + 5 * std::sqrt(98.0));
  // and no single position five sigma off
  const double sigma = std::sqrt(static_cast<double>(kDraws) * (5.0 / 50) * (45.0 / 50));
  for (std::int64_t c : counts) EXPECT_LT(std::abs(static_cast<double>(c) - expected), 5 * sigma);
}

TEST(Encoding, DenseHex) {
  EXPECT_EQ(encode_dense_hex(p2({1, 0, 1, 0, 0, 1})), "52");  // x^5+x^2+1
  EXPECT_EQ(encode_dense_hex(Poly::x_pow_minus_one(kF2, 11)), "108");
  EXPECT_EQ(encode_dense_hex(Poly::zero(kF2)), "0");
  EXPECT_EQ(decode_dense_hex(kF2, "52"), p2({1, 0, 1, 0, 0, 1}));
  EXPECT_TRUE(decode_dense_hex(kF2, "0").is_zero());
  EXPECT_TRUE(decode_dense_hex(kF2, "").is_zero());
  EXPECT_THROW(encode_dense_hex(Poly::one(kF3)), ParamError);
  EXPECT_THROW(decode_dense_hex(kF2, "5G"), ParamError);
}

TEST(Encoding, Sparse) {
  EXPECT_EQ(encode_sparse(p2({1, 0, 1, 0, 0, 1})), "0,2,5");
  EXPECT_EQ(encode_sparse(Poly::zero(kF2)), "");
  EXPECT_EQ(decode_sparse(kF2, "0,2,5"), p2({1, 0, 1, 0, 0, 1}));
  EXPECT_THROW(decode_sparse(kF2, "2,2"), ParamError);
  EXPECT_THROW(decode_sparse(kF2, "5,2"), ParamError);

  Poly p5 = Poly::from_coeffs(kF5, {3, 0, 4});
  EXPECT_EQ(encode_sparse(p5), "0:3,2:4");
  EXPECT_EQ(decode_sparse(kF5, "0:3,2:4"), p5);
  EXPECT_THROW(decode_sparse(kF5, "0,2"), ParamError);
}

TEST(Encoding, RoundTripProperty) {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    Poly p = testutil::random_poly(kF2, rng, 150);
    EXPECT_EQ(decode_dense_hex(kF2, encode_dense_hex(p)), p);
    EXPECT_EQ(decode_sparse(kF2, encode_sparse(p)), p);
    Poly p5 = testutil::random_poly(kF5, rng, 30);
    EXPECT_EQ(decode_sparse(kF5, encode_sparse(p5)), p5);
  }
}

}  // namespace
