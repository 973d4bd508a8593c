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

// Dense univariate polynomials over Integer and Rational coefficients, and
// integer Laurent polynomials for identities in x + 1/x.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "niven/arith.hpp"

namespace niven {

// Thrown by exact_div when the divisor leaves a remainder.
class NotExactError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string coeff_text(const Integer& c) { return to_string(c); }
inline std::string coeff_text(const Rational& c) { return to_string(c); }

// Shared printer: descending exponents, explicit signs, unit coefficients
// omitted, e.g. "x^4 - x^2 + 1" or "x^2 - 1/2 x - 1/4".
template <class C>
std::string format_terms(const std::vector<std::pair<long, C>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : terms) {
    bool negative = c < 0;
    C mag = negative ? C(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (exp == 0) {
      out += coeff_text(mag);
      continue;
    }
    if (mag != 1) out += coeff_text(mag) + " ";
    out += "x";
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

}  // namespace detail

template <class C>
class Polynomial {
 public:
  using Coeff = C;

  Polynomial() = default;
  Polynomial(std::initializer_list<C> ascending) : coeffs_(ascending) { trim(); }
  explicit Polynomial(std::vector<C> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Polynomial constant(const C& c) { return Polynomial(std::vector<C>{c}); }

  // c x^k
  static Polynomial monomial(std::size_t k, const C& c = C(1)) {
    std::vector<C> v(k + 1, C(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  // Coefficient of x^k, zero beyond the degree.
  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(0); }
  const C& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  const std::vector<C>& coefficients() const { return coeffs_; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), C(0));
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), C(0));
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }

  // Schoolbook product.
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<C> r(p.coeffs_.size() + q.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const C& s, Polynomial p) {
    for (auto& c : p.coeffs_) c *= s;
    p.trim();
    return p;
  }

  // Exact value by Horner's rule.
  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  std::string to_string() const {
    std::vector<std::pair<long, C>> terms;
    for (long k = degree(); k >= 0; --k)
      if (coeffs_[k] != 0) terms.emplace_back(k, coeffs_[k]);
    return detail::format_terms(terms);
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;  // coeffs_[k] multiplies x^k
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

// Scales by the least common denominator; the result is primitive up to the
// content of the numerators and has the same sign as the input.
inline IntPoly clear_denominators(const RatPoly& p) {
  Integer lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.push_back(Integer(c.get_num() * (lcm / c.get_den())));
  return IntPoly(std::move(v));
}

// x^k + c
template <class C>
Polynomial<C> binomial(std::size_t k, const C& c) {
  return Polynomial<C>::monomial(k) + Polynomial<C>::constant(c);
}

// Quotient of num by den over Z; throws NotExactError unless den divides num.
inline IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_div by zero polynomial");
  if (num.is_zero()) return {};
  long dn = num.degree(), dd = den.degree();
  if (dn < dd) throw NotExactError("exact_div: divisor degree exceeds dividend degree");
  std::vector<Integer> rem = num.coefficients();
  std::vector<Integer> quot(dn - dd + 1);
  const Integer& lead = den.leading();
  const auto& dc = den.coefficients();
  for (long k = dn - dd; k >= 0; --k) {
    Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NotExactError("exact_div: non-integral quotient coefficient");
    Integer q = top / lead;
    quot[k] = q;
    for (long i = 0; i <= dd; ++i) rem[k + i] -= q * dc[i];
  }
  for (long i = 0; i < dd; ++i)
    if (rem[i] != 0) throw NotExactError("exact_div: nonzero remainder");
  return IntPoly(std::move(quot));
}

struct RatDivision {
  RatPoly quot;
  RatPoly rem;
};

// num = den * quot + rem with deg rem < deg den.
inline RatDivision divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw std::domain_error("divmod by zero polynomial");
  long dd = den.degree();
  std::vector<Rational> rem = num.coefficients();
  if (num.degree() < dd) return {RatPoly{}, num};
  std::vector<Rational> quot(num.degree() - dd + 1);
  const Rational& lead = den.leading();
  const auto& dc = den.coefficients();
  for (long k = num.degree() - dd; k >= 0; --k) {
    Rational q = rem[k + dd] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (long i = 0; i <= dd; ++i) rem[k + i] -= q * dc[i];
  }
  rem.resize(dd);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

// Polynomial whose roots are c times the roots of p: x^n + c a_1 x^{n-1} +
// c^2 a_2 x^{n-2} + ... + c^n a_n, i.e. c^n p(x / c).
inline RatPoly scale_root(const RatPoly& p, const Rational& c) {
  if (c == 0) throw std::domain_error("scale_root: scale factor must be nonzero");
  if (!p.is_monic()) throw std::invalid_argument("scale_root: polynomial must be monic");
  std::vector<Rational> v = p.coefficients();
  const long n = p.degree();
  Rational power = 1;
  for (long k = n; k >= 0; --k) {
    v[k] *= power;
    power *= c;
  }
  return RatPoly(std::move(v));
}

// Finite sum of c_k x^k over k in Z, stored from exponent lo() upward.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long lo, std::vector<Integer> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) { trim(); }

  static LaurentPoly from_poly(const IntPoly& p) { return LaurentPoly(0, p.coefficients()); }

  // c x^k, k possibly negative.
  static LaurentPoly monomial(long k, const Integer& c = 1) { return LaurentPoly(k, {c}); }

  bool is_zero() const { return coeffs_.empty(); }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(long k) const {
    if (k < lo_ || k > hi()) return 0;
    return coeffs_[k - lo_];
  }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    long lo = std::min(p.lo_, q.lo_), hi = std::max(p.hi(), q.hi());
    std::vector<Integer> v(hi - lo + 1);
    for (long k = lo; k <= hi; ++k) v[k - lo] = p.coeff(k) + q.coeff(k);
    return LaurentPoly(lo, std::move(v));
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Integer> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return LaurentPoly(p.lo_ + q.lo_, std::move(v));
  }

  std::string to_string() const {
    std::vector<std::pair<long, Integer>> terms;
    for (long k = hi(); !is_zero() && k >= lo_; --k)
      if (coeff(k) != 0) terms.emplace_back(k, coeff(k));
    return detail::format_terms(terms);
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    lo_ = coeffs_.empty() ? 0 : lo_ + static_cast<long>(lead);
  }

  long lo_ = 0;
  std::vector<Integer> coeffs_;
};

// p(x + 1/x), expanded exactly.
inline LaurentPoly substitute_symmetric(const IntPoly& p) {
  const LaurentPoly sym = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  LaurentPoly acc;
  for (long k = p.degree(); k >= 0; --k) acc = acc * sym + LaurentPoly::monomial(0, p.coeff(k));
  return acc;
}

// x^k * l as an ordinary polynomial; requires lo(l) + k >= 0.
inline IntPoly laurent_shift_to_poly(const LaurentPoly& l, long k) {
  if (l.is_zero()) return {};
  if (l.lo() + k < 0) throw std::invalid_argument("laurent_shift_to_poly: negative exponent remains");
  std::vector<Integer> v(static_cast<std::size_t>(l.lo() + k), Integer(0));
  v.insert(v.end(), l.coefficients().begin(), l.coefficients().end());
  return IntPoly(std::move(v));
}

}  // namespace niven
