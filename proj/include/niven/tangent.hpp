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

// Simple-radical decisions for tan at rational multiples of pi.
//
// The decision follows the field-degree case analysis on L = Q(sin, cos):
// either [L : Q(sin)] = [L : Q(cos)], which leaves only tan = 0 or tan = +-1,
// or the two differ, which forces one of sin and cos to be rational and the
// other quadratic. Every positive answer is then re-proved exactly: x^n - m
// must divide an integer annihilator of tan built from the minimal
// polynomial of 2 cos at the doubled angle.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "niven/arith.hpp"
#include "niven/classification.hpp"
#include "niven/numeric.hpp"
#include "niven/poly.hpp"
#include "niven/radical.hpp"
#include "niven/trig_minpoly.hpp"

namespace niven {

class DivisionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degrees over Q of cos, sin and of L = Q(sin, cos) relative to each.
struct DegreeProfile {
  std::uint64_t deg_cos;  // [Q(cos) : Q]
  std::uint64_t deg_sin;  // [Q(sin) : Q]
  std::uint64_t rel_cos;  // [L : Q(cos)]
  std::uint64_t rel_sin;  // [L : Q(sin)]

  std::uint64_t field_degree() const { return deg_cos * rel_cos; }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

// sin^2 + cos^2 = 1 bounds both relative degrees by 2, so [L : Q] is the
// least common multiple of the two absolute degrees.
inline DegreeProfile degree_profile(std::uint64_t b) {
  if (b == 0) throw std::invalid_argument("degree_profile: b must be positive");
  if (b == 2) throw std::domain_error("degree_profile: tan is undefined for b = 2");
  DegreeProfile d{degree_p(b), sin_degree(b), 0, 0};
  const std::uint64_t field = std::lcm(d.deg_cos, d.deg_sin);
  d.rel_cos = field / d.deg_cos;
  d.rel_sin = field / d.deg_sin;
  if (d.rel_cos > 2 || d.rel_sin > 2)
    throw std::logic_error("degree_profile: relative degree exceeds 2 for b = " + std::to_string(b));
  return d;
}

// Integer polynomial with tan(angle) as a root. With a'/b' = 2a/b reduced
// and s = (-1)^{1+a'}, P_{b'} annihilates 2 s cos(2 a pi / b), and
// cos(2 theta) = (1 - t^2) / (1 + t^2) for t = tan(theta); clearing the
// denominator (1 + t^2)^{deg P} gives the result.
inline IntPoly tan_annihilator(const Angle& angle) {
  if (angle.b() == 2) throw std::domain_error("tan_annihilator: tan is undefined for b = 2");
  const Angle doubled(2 * angle.a(), static_cast<std::int64_t>(angle.b()));
  const IntPoly p = P(doubled.b());
  const long d = p.degree();
  const IntPoly one_minus = IntPoly{1, 0, -1}, one_plus = IntPoly{1, 0, 1};
  const Integer two_s = 2 * doubled.cos_sign_factor();

  std::vector<IntPoly> plus_powers{IntPoly::constant(1)};
  for (long k = 1; k <= d; ++k) plus_powers.push_back(plus_powers.back() * one_plus);

  IntPoly sum, minus_power = IntPoly::constant(1);
  Integer scale = 1;
  for (long k = 0; k <= d; ++k) {
    const Integer& c = p.coeff(static_cast<std::size_t>(k));
    if (c != 0) sum += Integer(c * scale) * (minus_power * plus_powers[static_cast<std::size_t>(d - k)]);
    minus_power = minus_power * one_minus;
    scale *= two_s;
  }
  return sum;
}

inline constexpr long kCertificateToleranceLog2 = -100;

// Certifies that tan(angle) is a root of the irreducible x^n - m. Throws
// DivisionFailed when x^n - m does not divide the annihilator, and
// NumericMismatch when the numeric value of tan is not a root.
inline TanCertificate tan_certificate(const Angle& angle, std::uint64_t n, const Rational& m,
                                      long prec_bits = default_precision()) {
  if (n == 0) throw std::invalid_argument("tan_certificate: n must be positive");
  TanCertificate cert;
  cert.n = n;
  cert.m = m;
  cert.divisor = binomial<Rational>(n, Rational(-m));
  cert.annihilator = tan_annihilator(angle);
  if (!divmod(to_rational(cert.annihilator), cert.divisor).rem.is_zero())
    throw DivisionFailed("x^" + std::to_string(n) + " - (" + to_string(m) + ") does not divide the annihilator of tan(" +
                         angle.pi_text() + ")");
  const bool irreducible = m == 0 ? n == 1 : vahlen_capelli_irreducible(n, m);
  if (!irreducible) throw std::invalid_argument("tan_certificate: x^n - m is reducible");
  const BigFloat residual = evaluate(cert.divisor, trig_at(angle, TrigFn::Tan, prec_bits));
  if (!abs_less(residual, BigFloat::pow2(kCertificateToleranceLog2)))
    throw NumericMismatch("tan(" + angle.pi_text() + ") is not a root of " + cert.divisor.to_string());
  return cert;
}

namespace detail {

// v^2 for a value whose minimal polynomial is x - v or x^2 - q.
inline std::optional<Rational> square_of(const RatPoly& minpoly) {
  if (minpoly.degree() == 1) return Rational(minpoly.coeff(0) * minpoly.coeff(0));
  if (minpoly.degree() == 2)
    if (auto shape = binomial_shape(minpoly)) return shape->m;
  return std::nullopt;
}

inline std::optional<BinomialShape> tan_candidate(const Angle& angle) {
  const std::uint64_t b = angle.b();
  const DegreeProfile d = degree_profile(b);
  if (d.deg_cos == d.deg_sin) {
    if (b == 1) return BinomialShape{1, 0};
    // Equal constant terms force |tan| = 1, i.e. cos^2 = 1/2.
    if (b % 4 != 0) return std::nullopt;
    auto shape = binomial_shape(minpoly_cos(angle).poly);
    if (!shape || *shape != BinomialShape{2, Rational(1, 2)}) return std::nullopt;
    return BinomialShape{1, Rational(sign_of(angle, TrigFn::Tan))};
  }
  // Unequal degrees: one of sin, cos must be rational and the other quadratic.
  if (std::min(d.deg_cos, d.deg_sin) != 1 || std::max(d.deg_cos, d.deg_sin) != 2) return std::nullopt;
  auto sin_sq = square_of(minpoly_sin(angle).poly);
  auto cos_sq = square_of(minpoly_cos(angle).poly);
  if (!sin_sq || !cos_sq || *cos_sq == 0) return std::nullopt;
  Rational tan_sq = *sin_sq / *cos_sq;
  if (auto root = exact_root(tan_sq, 2)) return BinomialShape{1, Rational(*root * sign_of(angle, TrigFn::Tan))};
  return BinomialShape{2, tan_sq};
}

}  // namespace detail

inline Classification classify_tan(const Angle& angle, long prec_bits = default_precision()) {
  Classification c;
  c.fn = TrigFn::Tan;
  c.angle = angle;
  if (angle.b() == 2) {
    c.kind = ClassKind::Undefined;
    return c;
  }
  auto candidate = detail::tan_candidate(angle);
  if (!candidate) {
    c.kind = ClassKind::NotSimpleRadical;
    return c;
  }
  const auto& [n, m] = *candidate;
  c.certificate = tan_certificate(angle, n, m, prec_bits);
  c.kind = n == 1 ? ClassKind::Rational : ClassKind::SimpleRadical;
  c.witness = RadicalWitness{n, m, n == 1 ? sgn(m) : sign_of(angle, TrigFn::Tan)};
  c.minpoly = c.certificate->divisor;
  return c;
}

// |c_S|^{[L:Q(sin)]} == |c_C|^{[L:Q(cos)]} |m|^{[L:Q(m^{1/n})]} for the
// constant terms c_S, c_C of the minimal polynomials of sin and cos and the
// witness (n, m) of a positive tangent classification with b > 2.
inline bool constants_relation_check(const Angle& angle) {
  if (angle.b() <= 2) throw std::invalid_argument("constants_relation_check: requires b > 2");
  const Classification c = classify_tan(angle);
  if (!c.positive()) throw std::invalid_argument("constants_relation_check: tan(" + angle.pi_text() + ") is not a simple radical");
  const DegreeProfile d = degree_profile(angle.b());
  const std::uint64_t n = c.witness->n;
  if (d.field_degree() % n != 0) return false;
  const Rational c_sin = abs(minpoly_sin(angle).poly.coeff(0));
  const Rational c_cos = abs(minpoly_cos(angle).poly.coeff(0));
  const Rational m = abs(c.witness->m);
  return ipow(c_sin, static_cast<long>(d.rel_sin)) ==
         ipow(c_cos, static_cast<long>(d.rel_cos)) * ipow(m, static_cast<long>(d.field_degree() / n));
}

}  // namespace niven
