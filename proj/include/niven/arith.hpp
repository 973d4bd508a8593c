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

// Exact integer and rational arithmetic plus the small amount of elementary
// number theory the rest of the library needs.
//
// Integer and Rational are GMP's C++ classes. Every Rational produced by
// make_rational or by arithmetic on canonical operands is canonical:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace niven {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// Parses "p", "-p", "p/q" with arbitrary-size decimal integers.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  Integer num, den(1);
  try {
    if (slash == std::string::npos) {
      num = Integer(text, 10);
    } else {
      num = Integer(text.substr(0, slash), 10);
      den = Integer(text.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  return make_rational(num, den);
}

inline std::string to_string(const Integer& z) { return z.get_str(10); }

// "3/4", "-1/2", "5" (denominator omitted when 1).
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational ipow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return ipow(Rational(1) / base, -exp);
  }
  auto e = static_cast<unsigned long>(exp);
  return make_rational(ipow(Integer(base.get_num()), e),
                       ipow(Integer(base.get_den()), e));
}

// Exact t-th root of an integer, if one exists. Negative inputs have a root
// only for odd t.
inline std::optional<Integer> exact_root(const Integer& z, unsigned long t) {
  if (t == 0) throw std::invalid_argument("zeroth root");
  if (z < 0 && t % 2 == 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), t) == 0) return std::nullopt;
  return r;
}

inline std::optional<Rational> exact_root(const Rational& q, unsigned long t) {
  auto num = exact_root(Integer(q.get_num()), t);
  if (!num) return std::nullopt;
  auto den = exact_root(Integer(q.get_den()), t);
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing, exponents >= 1.
using Factorization = std::vector<PrimePower>;

// Deterministic trial division.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline bool is_prime(std::uint64_t n) {
  auto f = factorize(n == 0 ? 1 : n);
  return f.size() == 1 && f.front().exponent == 1;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

// Ascending list of positive divisors.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

struct TwoPJ {
  std::uint64_t p;
  unsigned j;

  friend bool operator==(const TwoPJ&, const TwoPJ&) = default;
};

// (p, j) with b = 2 p^j, p prime, j >= 1. p = 2 is allowed (b = 2^{j+1}).
inline std::optional<TwoPJ> two_p_j_form(std::uint64_t b) {
  if (b == 0) throw std::invalid_argument("two_p_j_form: b must be positive");
  if (b % 2 != 0 || b == 2) return std::nullopt;
  auto f = factorize(b / 2);
  if (f.size() != 1) return std::nullopt;
  return TwoPJ{f.front().prime, f.front().exponent};
}

}  // namespace niven
