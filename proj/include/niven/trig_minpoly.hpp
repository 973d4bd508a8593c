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

// Minimal polynomials of trigonometric values at rational multiples of pi.
//
// P_b is the monic minimal polynomial of 2 (-1)^{1+a} cos(a pi / b) for a
// coprime to b. It is assembled from the palindromic coefficients of
// Phi_{2b}: with p = deg P_b,
//
//   x^{-p} Phi_{2b}(x) = sum_{j<p} a(j, 2b) (x^{p-j} + x^{j-p}) + a(p, 2b)
//                      = sum_{j<p} a(j, 2b) R_{p-j}(x + 1/x) + a(p, 2b).
//
// Minimal polynomials of cos and sin follow by rescaling roots and by the
// shift sin(r pi) = cos((1/2 - r) pi).

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "niven/arith.hpp"
#include "niven/cheb.hpp"
#include "niven/cyclotomic.hpp"
#include "niven/detail/memo.hpp"
#include "niven/poly.hpp"

namespace niven {

// a pi / b with gcd(a, b) = 1, b >= 1 and 0 <= a < 2b.
class Angle {
 public:
  Angle(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("angle with zero denominator");
    Rational r = make_rational(num, den);
    Integer b = r.get_den();
    if (b > Integer(std::numeric_limits<std::int64_t>::max() / 4))
      throw std::out_of_range("angle denominator too large");
    Integer a = r.get_num();
    Integer period = 2 * b;
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), period.get_mpz_t());
    a_ = a.get_si();
    b_ = b.get_ui();
  }
  Angle(std::int64_t num, std::int64_t den) : Angle(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}
  explicit Angle(const Rational& r) : Angle(Integer(r.get_num()), Integer(r.get_den())) {}

  // "a/b", "-a/b" or "a".
  static Angle parse(const std::string& text) { return Angle(parse_rational(text)); }

  std::int64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }
  Rational ratio() const { return make_rational(Integer(static_cast<long>(a_)), Integer(static_cast<unsigned long>(b_))); }

  // (-1)^{1+a}
  int cos_sign_factor() const { return a_ % 2 != 0 ? 1 : -1; }

  // "0", "pi", "pi/6", "5pi/6".
  std::string pi_text() const {
    if (a_ == 0) return "0";
    std::string s = a_ == 1 ? "pi" : std::to_string(a_) + "pi";
    if (b_ != 1) s += "/" + std::to_string(b_);
    return s;
  }

  // "a/b"
  std::string text() const { return std::to_string(a_) + "/" + std::to_string(b_); }

  friend bool operator==(const Angle&, const Angle&) = default;
  friend auto operator<=>(const Angle&, const Angle&) = default;

 private:
  std::int64_t a_ = 0;
  std::uint64_t b_ = 1;
};

// Canonical angles a/b for a fixed b, a ascending.
inline std::vector<Angle> angles_with_denominator(std::uint64_t b) {
  std::vector<Angle> out;
  for (std::uint64_t a = 0; a < 2 * b; ++a)
    if (gcd(a, b) == 1) out.emplace_back(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
  return out;
}

// deg P_n: 1 for n = 1, phi(n) for even n, phi(n)/2 for odd n >= 3.
inline std::uint64_t degree_p(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("degree_p: n must be positive");
  if (n == 1) return 1;
  return n % 2 == 0 ? euler_phi(n) : euler_phi(n) / 2;
}

// [Q(sin(a pi / b)) : Q]
inline std::uint64_t sin_degree(std::uint64_t b) {
  if (b == 0) throw std::invalid_argument("sin_degree: b must be positive");
  if (b == 2) return 1;
  if (b % 4 == 2 && b >= 6) return euler_phi(b) / 2;
  return euler_phi(b);
}

inline IntPoly P(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("P: n must be positive");
  static detail::MemoTable<std::uint64_t, IntPoly> memo;
  return memo.get(n, [](std::uint64_t m) {
    if (m == 1) return IntPoly{2, 1};
    const std::uint64_t p = degree_p(m);
    IntPoly sum = IntPoly::constant(coeff_a(p, 2 * m));
    for (std::uint64_t j = 0; j < p; ++j) {
      Integer a = coeff_a(j, 2 * m);
      if (a != 0) sum += a * R(p - j);
    }
    return sum;
  });
}

// Phi_{2n}(x) == x^{p_n} P_n(x + 1/x), for n >= 2.
inline bool verify_P_cyclotomic(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("verify_P_cyclotomic: n must be at least 2");
  return laurent_shift_to_poly(substitute_symmetric(P(n)), static_cast<long>(degree_p(n))) == cyclotomic(2 * n);
}

// |P_n(0)|: 2 for n = 1, 0 for n = 2, p for n = 2 p^j, 1 otherwise.
inline std::uint64_t constant_term_magnitude(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("constant_term_magnitude: n must be positive");
  if (n == 1) return 2;
  if (n == 2) return 0;
  if (auto form = two_p_j_form(n)) return form->p;
  return 1;
}

enum class MinPolySubject { TwoSignedCos, Cos, Sin };

struct MinPolyResult {
  RatPoly poly;  // monic
  MinPolySubject subject;
  Angle angle;
  int sign;  // (-1)^{1+a} of the angle P was taken at
};

inline MinPolyResult minpoly_2signed_cos(const Angle& angle) {
  return {to_rational(P(angle.b())), MinPolySubject::TwoSignedCos, angle, angle.cos_sign_factor()};
}

// cos(a pi / b) = (sign / 2) * (root of P_b).
inline MinPolyResult minpoly_cos(const Angle& angle) {
  MinPolyResult r = minpoly_2signed_cos(angle);
  r.poly = scale_root(r.poly, make_rational(r.sign, 2));
  r.subject = MinPolySubject::Cos;
  return r;
}

// The angle whose cosine equals sin(angle): (1/2 - a/b) pi.
inline Angle complementary(const Angle& angle) { return Angle(Rational(Rational(1, 2) - angle.ratio())); }

// The reported angle stays the input angle; sign refers to the shifted one.
inline MinPolyResult minpoly_sin(const Angle& angle) {
  MinPolyResult r = minpoly_cos(complementary(angle));
  r.subject = MinPolySubject::Sin;
  r.angle = angle;
  return r;
}

}  // namespace niven
