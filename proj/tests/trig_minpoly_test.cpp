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

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "niven/numeric.hpp"
#include "niven/trig_minpoly.hpp"
#include "test_util.hpp"

namespace niven {
namespace {

using testing::q;
using testing::ratpoly;

// Oracle for P_b: the product of (x - 2 cos(k pi / b)) over 0 < k < b with
// gcd(k, 2b) = 1, expanded in long double and rounded to integers.
IntPoly product_of_conjugates(std::uint64_t b) {
  std::vector<long double> c{1.0L};  // ascending
  for (std::uint64_t k = 1; k < b; ++k) {
    if (std::gcd(k, 2 * b) != 1) continue;
    long double root = 2 * std::cos(std::numbers::pi_v<long double> * k / b);
    std::vector<long double> next(c.size() + 1, 0.0L);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  std::vector<Integer> rounded;
  for (long double v : c) rounded.emplace_back(static_cast<long>(std::llround(v)));
  return IntPoly(std::move(rounded));
}

TEST(Angle, Canonicalizes) {
  EXPECT_EQ(Angle(-1, 6), Angle(11, 6));
  EXPECT_EQ(Angle(2, 4), Angle(1, 2));
  EXPECT_EQ(Angle(7, 3).a(), 1);
  EXPECT_EQ(Angle(0, 5), Angle(0, 1));
  EXPECT_EQ(Angle(3, -4), Angle(5, 4));
  EXPECT_EQ(Angle::parse("-1/6"), Angle(11, 6));
  EXPECT_EQ(Angle::parse("3"), Angle(1, 1));
  EXPECT_THROW(Angle(1, 0), std::invalid_argument);
  EXPECT_EQ(Angle(1, 6).pi_text(), "pi/6");
  EXPECT_EQ(Angle(5, 6).pi_text(), "5pi/6");
  EXPECT_EQ(Angle(1, 1).pi_text(), "pi");
  EXPECT_EQ(Angle(0, 1).pi_text(), "0");
}

TEST(Angle, ParityOfNumeratorSurvivesReduction) {
  for (std::int64_t a = -40; a <= 40; ++a)
    for (std::int64_t b = 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ASSERT_EQ(Angle(a, b).cos_sign_factor(), (a % 2 != 0) ? 1 : -1);
    }
}

TEST(DegreeP, Examples) {
  EXPECT_EQ(degree_p(1), 1u);
  EXPECT_EQ(degree_p(3), 1u);
  EXPECT_EQ(degree_p(12), 4u);
  EXPECT_THROW(degree_p(0), std::invalid_argument);
}

TEST(P, Examples) {
  EXPECT_EQ(P(1), (IntPoly{2, 1}));
  EXPECT_EQ(P(2), (IntPoly{0, 1}));
  EXPECT_EQ(P(4), (IntPoly{-2, 0, 1}));
  EXPECT_EQ(P(6), (IntPoly{-3, 0, 1}));
  EXPECT_THROW(P(0), std::invalid_argument);
}

TEST(P, MatchesProductOfConjugates) {
  for (std::uint64_t b = 2; b <= 30; ++b) ASSERT_EQ(P(b), product_of_conjugates(b)) << b;
}

TEST(VerifyPCyclotomic, Examples) {
  EXPECT_TRUE(verify_P_cyclotomic(2));
  EXPECT_TRUE(verify_P_cyclotomic(6));
  EXPECT_TRUE(verify_P_cyclotomic(105));
  EXPECT_THROW(verify_P_cyclotomic(1), std::invalid_argument);
}

TEST(VerifyPCyclotomic, HoldsUpTo200) {
  for (std::uint64_t n = 2; n <= 200; ++n) ASSERT_TRUE(verify_P_cyclotomic(n)) << n;
}

TEST(ConstantTermMagnitude, Examples) {
  EXPECT_EQ(constant_term_magnitude(1), 2u);
  EXPECT_EQ(constant_term_magnitude(2), 0u);
  EXPECT_EQ(constant_term_magnitude(6), 3u);
  EXPECT_EQ(constant_term_magnitude(8), 2u);
  EXPECT_EQ(constant_term_magnitude(15), 1u);
}

TEST(P, DegreeAndConstantTablesUpTo500) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const IntPoly p = P(n);
    ASSERT_EQ(static_cast<std::uint64_t>(p.degree()), degree_p(n)) << n;
    ASSERT_EQ(abs(p.coeff(0)), constant_term_magnitude(n)) << n;
    ASSERT_TRUE(p.is_monic());
  }
}

TEST(Minpoly2SignedCos, Examples) {
  auto r = minpoly_2signed_cos(Angle(1, 3));
  EXPECT_EQ(r.poly, ratpoly({-1, 1}));
  EXPECT_EQ(r.sign, 1);
  EXPECT_EQ(minpoly_2signed_cos(Angle(1, 4)).poly, ratpoly({-2, 0, 1}));
  r = minpoly_2signed_cos(Angle(1, 1));
  EXPECT_EQ(r.poly, ratpoly({2, 1}));
  EXPECT_EQ(r.sign, 1);
  EXPECT_EQ(minpoly_2signed_cos(Angle(2, 3)).sign, -1);
}

TEST(MinpolyCos, Examples) {
  EXPECT_EQ(minpoly_cos(Angle(1, 3)).poly, ratpoly({q(-1, 2), 1}));
  EXPECT_EQ(minpoly_cos(Angle(1, 4)).poly, ratpoly({q(-1, 2), 0, 1}));
  EXPECT_EQ(minpoly_cos(Angle(1, 5)).poly, ratpoly({q(-1, 4), q(-1, 2), 1}));
  EXPECT_EQ(minpoly_cos(Angle(2, 3)).poly, ratpoly({q(1, 2), 1}));
  EXPECT_EQ(minpoly_cos(Angle(0, 1)).poly, ratpoly({-1, 1}));
  EXPECT_EQ(minpoly_cos(Angle(1, 1)).poly, ratpoly({1, 1}));
  EXPECT_EQ(minpoly_cos(Angle(1, 1)).subject, MinPolySubject::Cos);
}

TEST(MinpolySin, Examples) {
  EXPECT_EQ(minpoly_sin(Angle(1, 2)).poly, ratpoly({-1, 1}));
  EXPECT_EQ(minpoly_sin(Angle(1, 3)).poly, ratpoly({q(-3, 4), 0, 1}));
  EXPECT_EQ(minpoly_sin(Angle(1, 6)).poly, ratpoly({q(-1, 2), 1}));
  EXPECT_EQ(minpoly_sin(Angle(0, 1)).poly, ratpoly({0, 1}));
  EXPECT_EQ(minpoly_sin(Angle(1, 6)).subject, MinPolySubject::Sin);
  EXPECT_EQ(minpoly_sin(Angle(1, 6)).angle, Angle(1, 6));
}

TEST(SinDegree, Examples) {
  EXPECT_EQ(sin_degree(2), 1u);
  EXPECT_EQ(sin_degree(6), 1u);
  EXPECT_EQ(sin_degree(5), 4u);
  EXPECT_EQ(sin_degree(1), 1u);
  EXPECT_THROW(sin_degree(0), std::invalid_argument);
}

TEST(MinpolySin, DegreeMatchesFormula) {
  for (std::uint64_t b = 1; b <= 60; ++b)
    for (const Angle& angle : angles_with_denominator(b))
      ASSERT_EQ(static_cast<std::uint64_t>(minpoly_sin(angle).poly.degree()), sin_degree(b)) << angle.text();
}

TEST(Minpoly, MonicReducedAndNumericRoots) {
  const BigFloat tol = BigFloat::pow2(-100);
  for (std::uint64_t b = 1; b <= 60; ++b) {
    for (const Angle& angle : angles_with_denominator(b)) {
      const RatPoly c = minpoly_cos(angle).poly, s = minpoly_sin(angle).poly;
      ASSERT_TRUE(c.is_monic());
      ASSERT_TRUE(s.is_monic());
      for (const auto& coeff : c.coefficients()) ASSERT_EQ(gcd(Integer(coeff.get_num()), Integer(coeff.get_den())), 1);
      ASSERT_TRUE(abs_less(evaluate(c, trig_at(angle, TrigFn::Cos, 256)), tol)) << angle.text();
      ASSERT_TRUE(abs_less(evaluate(s, trig_at(angle, TrigFn::Sin, 256)), tol)) << angle.text();
    }
  }
}

}  // namespace
}  // namespace niven
