// Copyright 2026 The niven Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "niven/radical.hpp"
#include "test_util.hpp"

namespace niven {
namespace {

using testing::q;
using testing::ratpoly;

// Brute-force reducibility of x^n - m: search k = u / v with |u| <= 30 and
// 1 <= v <= 10 for m = k^t (t | n, t > 1) or, when 4 | n, m = -4 k^4. For
// |num(m)| <= 30 and den(m) <= 10 these bounds contain every candidate k.
bool brute_reducible(std::uint64_t n, const Rational& m) {
  for (long u = -30; u <= 30; ++u) {
    for (long v = 1; v <= 10; ++v) {
      const Rational k = make_rational(u, v);
      for (std::uint64_t t = 2; t <= n; ++t)
        if (n % t == 0 && ipow(k, static_cast<long>(t)) == m) return true;
      if (n % 4 == 0 && Rational(-4 * ipow(k, 4)) == m) return true;
    }
  }
  return false;
}

TEST(BinomialShape, Examples) {
  EXPECT_EQ(binomial_shape(ratpoly({q(-1, 2), 0, 1})), (BinomialShape{2, q(1, 2)}));
  EXPECT_EQ(binomial_shape(ratpoly({q(-1, 2), 1})), (BinomialShape{1, q(1, 2)}));
  EXPECT_EQ(binomial_shape(ratpoly({q(-1, 4), q(-1, 2), 1})), std::nullopt);
  EXPECT_THROW(binomial_shape(ratpoly({1, 2})), std::invalid_argument);
}

TEST(VahlenCapelli, Examples) {
  EXPECT_TRUE(vahlen_capelli_irreducible(2, 2));
  EXPECT_FALSE(vahlen_capelli_irreducible(4, 4));
  EXPECT_FALSE(vahlen_capelli_irreducible(4, -4));
  EXPECT_FALSE(vahlen_capelli_irreducible(4, q(-1, 4)));  // -4 (1/2)^4
  EXPECT_TRUE(vahlen_capelli_irreducible(2, -4));
  EXPECT_TRUE(vahlen_capelli_irreducible(3, 2));
  EXPECT_FALSE(vahlen_capelli_irreducible(6, 8));
  EXPECT_TRUE(vahlen_capelli_irreducible(1, 9));
  EXPECT_THROW(vahlen_capelli_irreducible(2, 0), std::invalid_argument);
}

TEST(VahlenCapelli, AgreesWithBruteForce) {
  int reducible = 0;
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (long u = -30; u <= 30; ++u)
      for (long v = 1; v <= 10; ++v) {
        if (u == 0) continue;
        const Rational m = make_rational(u, v);
        const bool expected = !brute_reducible(n, m);
        ASSERT_EQ(vahlen_capelli_irreducible(n, m), expected) << "n=" << n << " m=" << to_string(m);
        reducible += !expected;
      }
  EXPECT_GT(reducible, 0);
}

TEST(PredictedExponent, Examples) {
  EXPECT_EQ(predicted_exponent(4), 2u);
  EXPECT_EQ(predicted_exponent(6), 2u);
  EXPECT_EQ(predicted_exponent(18), 6u);
  EXPECT_EQ(predicted_exponent(8), 4u);
  EXPECT_THROW(predicted_exponent(15), std::invalid_argument);
}

TEST(PredictedExponent, EqualsDegreeOfP) {
  for (std::uint64_t b = 3; b <= 500; ++b)
    if (two_p_j_form(b)) {
      ASSERT_EQ(predicted_exponent(b), degree_p(b)) << b;
    }
}

TEST(PredictedMMagnitude, Examples) {
  EXPECT_EQ(predicted_m_magnitude(4), q(1, 2));
  EXPECT_EQ(predicted_m_magnitude(6), q(3, 4));
  // 3 * 2^{3 * (-2)}
  EXPECT_EQ(predicted_m_magnitude(18), q(3, 64));
  EXPECT_EQ(predicted_m_magnitude(8), q(1, 8));
  EXPECT_THROW(predicted_m_magnitude(12), std::invalid_argument);
}

TEST(OddPrimeSearch, Examples) {
  EXPECT_EQ(oddprime_solution_search(97, 8), (std::vector<TwoPJ>{{3, 1}}));
  EXPECT_EQ(oddprime_solution_search(3, 1), (std::vector<TwoPJ>{{3, 1}}));
  EXPECT_TRUE(oddprime_solution_search(5, 5, 5).empty());
  EXPECT_TRUE(oddprime_solution_search(2, 3).empty());
}

TEST(ClassifyCos, Examples) {
  Classification c = classify_cos(Angle(1, 3));
  EXPECT_EQ(c.kind, ClassKind::Rational);
  EXPECT_EQ(c.witness, (RadicalWitness{1, q(1, 2), 1}));

  c = classify_cos(Angle(1, 6));
  EXPECT_EQ(c.kind, ClassKind::SimpleRadical);
  EXPECT_EQ(c.witness, (RadicalWitness{2, q(3, 4), 1}));
  EXPECT_EQ(c.minpoly, ratpoly({q(-3, 4), 0, 1}));

  c = classify_cos(Angle(1, 5));
  EXPECT_EQ(c.kind, ClassKind::NotSimpleRadical);
  EXPECT_FALSE(c.witness);

  c = classify_cos(Angle(1, 2));
  EXPECT_EQ(c.kind, ClassKind::Rational);
  EXPECT_EQ(c.witness, (RadicalWitness{1, q(0), 0}));

  c = classify_cos(Angle(5, 6));
  EXPECT_EQ(c.witness, (RadicalWitness{2, q(3, 4), -1}));
}

TEST(ClassifySin, Examples) {
  Classification s = classify_sin(Angle(1, 2));
  EXPECT_EQ(s.kind, ClassKind::Rational);
  EXPECT_EQ(s.witness->m, 1);

  s = classify_sin(Angle(1, 4));
  EXPECT_EQ(s.kind, ClassKind::SimpleRadical);
  EXPECT_EQ(s.witness, (RadicalWitness{2, q(1, 2), 1}));

  s = classify_sin(Angle(1, 5));
  EXPECT_EQ(s.kind, ClassKind::NotSimpleRadical);
  EXPECT_EQ(s.minpoly.degree(), 4);

  s = classify_sin(Angle(5, 4));
  EXPECT_EQ(s.witness, (RadicalWitness{2, q(1, 2), -1}));
}

TEST(Classify, PredictionsHoldForTwoPJ) {
  for (std::uint64_t b = 3; b <= 500; ++b) {
    if (!two_p_j_form(b)) continue;
    for (const Angle& angle : angles_with_denominator(b)) {
      Classification c = classify_cos(angle);
      if (c.kind != ClassKind::SimpleRadical) continue;
      ASSERT_EQ(c.witness->n, predicted_exponent(b));
      ASSERT_EQ(abs(c.witness->m), predicted_m_magnitude(b));
    }
  }
}

TEST(Classify, PositivesAreIrreducibleBinomials) {
  for (std::uint64_t b = 1; b <= 60; ++b) {
    for (const Angle& angle : angles_with_denominator(b)) {
      for (const Classification& c : {classify_cos(angle), classify_sin(angle)}) {
        ASSERT_EQ(c.kind == ClassKind::Rational, c.minpoly.degree() == 1);
        if (c.kind != ClassKind::SimpleRadical) continue;
        ASSERT_GE(c.witness->n, 2u);
        ASSERT_TRUE(vahlen_capelli_irreducible(c.witness->n, c.witness->m));
        ASSERT_EQ(c.minpoly, binomial<Rational>(c.witness->n, Rational(-c.witness->m)));
        ASSERT_NE(c.witness->value_sign, 0);
      }
    }
  }
}

TEST(Classify, CosineIsEven) {
  for (std::uint64_t b = 1; b <= 80; ++b) {
    for (const Angle& angle : angles_with_denominator(b)) {
      Classification c = classify_cos(angle);
      Classification mirrored = classify_cos(Angle(static_cast<std::int64_t>(2 * b) - angle.a(), static_cast<std::int64_t>(b)));
      ASSERT_EQ(c.kind, mirrored.kind);
      if (!c.witness) continue;
      ASSERT_EQ(c.witness->n, mirrored.witness->n);
      ASSERT_EQ(abs(c.witness->m), abs(mirrored.witness->m));
    }
  }
}

TEST(Classify, RationalCosineValues) {
  const std::set<Rational> rational_values{q(-1), q(-1, 2), q(0), q(1, 2), q(1)};
  for (std::uint64_t b = 1; b <= 200; ++b)
    for (const Angle& angle : angles_with_denominator(b)) {
      Classification c = classify_cos(angle);
      if (c.kind == ClassKind::Rational) {
        ASSERT_TRUE(rational_values.contains(c.witness->m)) << angle.text();
      }
      ASSERT_EQ(c.kind == ClassKind::Rational, b <= 3) << angle.text();
    }
}

TEST(RationalPower, FollowsWitness) {
  Classification c = classify_cos(Angle(1, 6));
  EXPECT_EQ(rational_power(c, 1), std::nullopt);
  EXPECT_EQ(rational_power(c, 2), q(3, 4));
  EXPECT_EQ(rational_power(c, 3), std::nullopt);
  EXPECT_EQ(rational_power(c, 4), q(9, 16));
  EXPECT_EQ(rational_power(classify_cos(Angle(2, 3)), 3), q(-1, 8));
  EXPECT_EQ(rational_power(classify_cos(Angle(1, 5)), 10), std::nullopt);
  EXPECT_THROW(rational_power(c, 0), std::invalid_argument);
}

}  // namespace
}  // namespace niven
