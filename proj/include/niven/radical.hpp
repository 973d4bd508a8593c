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

// Simple-radical decisions for cos and sin at rational multiples of pi.
//
// The minimal polynomial of a real simple n-th radical with value^n = m is
// x^n - m, so classification reads that shape off the exact minimal
// polynomial. The Vahlen-Capelli criterion is kept as an independent check on
// every positive answer.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "niven/arith.hpp"
#include "niven/classification.hpp"
#include "niven/numeric.hpp"
#include "niven/poly.hpp"
#include "niven/trig_minpoly.hpp"

namespace niven {

struct BinomialShape {
  std::uint64_t n;
  Rational m;

  friend bool operator==(const BinomialShape&, const BinomialShape&) = default;
};

// (n, m) when p = x^n - m.
inline std::optional<BinomialShape> binomial_shape(const RatPoly& p) {
  if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("binomial_shape: expected a monic non-constant polynomial");
  for (long k = 1; k < p.degree(); ++k)
    if (p.coeff(static_cast<std::size_t>(k)) != 0) return std::nullopt;
  return BinomialShape{static_cast<std::uint64_t>(p.degree()), Rational(-p.coeff(0))};
}

// Whether x^n - m is irreducible over Q. It is reducible exactly when
// m = k^t for a rational k and some t | n with t > 1, or when 4 | n and
// m = -4 k^4.
inline bool vahlen_capelli_irreducible(std::uint64_t n, const Rational& m) {
  if (n == 0) throw std::invalid_argument("vahlen_capelli_irreducible: n must be positive");
  if (m == 0) throw std::invalid_argument("vahlen_capelli_irreducible: m must be nonzero");
  for (std::uint64_t t : divisors(n))
    if (t > 1 && exact_root(m, t)) return false;
  if (n % 4 == 0 && m < 0 && exact_root(Rational(m / -4), 4)) return false;
  return true;
}

// 2^j for b = 2^{j+1}; p^{j-1}(p - 1) for b = 2 p^j with p odd.
inline std::uint64_t predicted_exponent(std::uint64_t b) {
  auto form = two_p_j_form(b);
  if (!form) throw std::invalid_argument("predicted_exponent: b is not of the form 2 p^j");
  const auto [p, j] = *form;
  if (p == 2) return std::uint64_t{1} << j;
  std::uint64_t n = p - 1;
  for (unsigned i = 1; i < j; ++i) n *= p;
  return n;
}

// |cos^n(a pi / b)| forced by the constant term of P_b: 2^{1 - 2^j} for
// p = 2, p 2^{p^{j-1}(1 - p)} for odd p.
inline Rational predicted_m_magnitude(std::uint64_t b) {
  const auto form = two_p_j_form(b);
  if (!form) throw std::invalid_argument("predicted_m_magnitude: b is not of the form 2 p^j");
  const std::uint64_t n = predicted_exponent(b);
  if (form->p == 2) return ipow(Rational(2), 1 - static_cast<long>(n));
  return Rational(static_cast<unsigned long>(form->p)) * ipow(Rational(2), -static_cast<long>(n));
}

inline constexpr std::uint64_t kOddPrimeExponentGuard = 1'000'000;

// Odd primes p in [p_min, p_max] and 1 <= j <= j_max with
// 2^{p^{j-1}(p-1)} - p = 1, by exact evaluation. Pairs whose exponent exceeds
// kOddPrimeExponentGuard are skipped; for them 2^{p-1} > p + 1 already rules
// the equation out.
inline std::vector<TwoPJ> oddprime_solution_search(std::uint64_t p_max, unsigned j_max, std::uint64_t p_min = 3) {
  std::vector<TwoPJ> found;
  for (std::uint64_t p = std::max<std::uint64_t>(p_min, 3); p <= p_max; ++p) {
    if (p % 2 == 0 || !is_prime(p)) continue;
    std::uint64_t exponent = p - 1;
    for (unsigned j = 1; j <= j_max; ++j) {
      if (j > 1) {
        if (exponent > kOddPrimeExponentGuard / p) break;
        exponent *= p;
      }
      if (exponent > kOddPrimeExponentGuard) break;
      Integer lhs = ipow(Integer(2), exponent) - Integer(static_cast<unsigned long>(p));
      if (lhs == 1) found.push_back({p, j});
    }
  }
  return found;
}

namespace detail {

inline Classification classify_from_minpoly(TrigFn fn, const Angle& angle, RatPoly minpoly) {
  Classification c;
  c.fn = fn;
  c.angle = angle;
  if (minpoly.degree() == 1) {
    Rational value = -minpoly.coeff(0);
    c.kind = ClassKind::Rational;
    c.witness = RadicalWitness{1, value, sgn(value)};
  } else if (auto shape = binomial_shape(minpoly)) {
    c.kind = ClassKind::SimpleRadical;
    c.witness = RadicalWitness{shape->n, shape->m, sign_of(angle, fn)};
  } else {
    c.kind = ClassKind::NotSimpleRadical;
  }
  c.minpoly = std::move(minpoly);
  return c;
}

}  // namespace detail

inline Classification classify_cos(const Angle& angle) {
  return detail::classify_from_minpoly(TrigFn::Cos, angle, minpoly_cos(angle).poly);
}

inline Classification classify_sin(const Angle& angle) {
  return detail::classify_from_minpoly(TrigFn::Sin, angle, minpoly_sin(angle).poly);
}

}  // namespace niven
