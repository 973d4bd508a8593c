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

// High-precision numeric evaluation of cos, sin and tan at rational multiples
// of pi. This is the numeric cross-check for the exact modules: it resolves
// signs and pre-screens candidates, and never decides anything on its own.
//
// Error contract: trig_at(angle, fn, prec) is within 2^{4-prec} of the true
// value whenever that value has magnitude at most 4.

#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "niven/arith.hpp"
#include "niven/detail/memo.hpp"
#include "niven/poly.hpp"
#include "niven/trig_minpoly.hpp"

namespace niven {

inline constexpr long kDefaultPrecisionBits = 256;
inline constexpr long kMaxPrecisionBits = 4096;

// NIVEN_PREC_BITS when set to an integer >= 64, otherwise 256.
inline long default_precision() {
  if (const char* env = std::getenv("NIVEN_PREC_BITS")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 64 && bits <= (1L << 20)) return bits;
  }
  return kDefaultPrecisionBits;
}

// RAII value wrapper over an MPFR float; rounding is always to nearest.
class BigFloat {
 public:
  explicit BigFloat(long prec = kDefaultPrecisionBits) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const Rational& q, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept : BigFloat(2) { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  // 2^e
  static BigFloat pow2(long e, long prec = 64) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  long precision() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // The stored binary value, exactly.
  Rational to_rational() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("BigFloat is not finite");
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  std::string to_string(int digits = 30) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits, v_);
    std::string s(raw);
    mpfr_free_str(raw);
    return s;
  }

  BigFloat abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator+(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_add); }
  friend BigFloat operator-(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_sub); }
  friend BigFloat operator*(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_mul); }
  friend BigFloat operator/(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_div); }

  friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
  friend bool operator>(const BigFloat& x, const BigFloat& y) { return y < x; }

  // |x| < |y|
  friend bool abs_less(const BigFloat& x, const BigFloat& y) { return mpfr_cmpabs(x.v_, y.v_) < 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  template <class Op>
  static BigFloat binary(const BigFloat& x, const BigFloat& y, Op op) {
    BigFloat r(std::max(x.precision(), y.precision()));
    op(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

// pi correctly rounded to prec bits, memoized per precision.
inline BigFloat pi_at(long prec) {
  static detail::MemoTable<long, BigFloat> memo;
  return memo.get(prec, [](long p) {
    BigFloat r(p);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
  });
}

enum class TrigFn { Cos, Sin, Tan };

inline const char* name_of(TrigFn fn) {
  switch (fn) {
    case TrigFn::Cos: return "cos";
    case TrigFn::Sin: return "sin";
    case TrigFn::Tan: return "tan";
  }
  return "?";
}

inline BigFloat trig_at(const Angle& angle, TrigFn fn, long prec_bits = default_precision()) {
  if (prec_bits < 64) throw std::invalid_argument("trig_at: precision must be at least 64 bits");
  if (fn == TrigFn::Tan && angle.b() == 2) throw std::domain_error("tan is undefined at odd multiples of pi/2");
  // Guard bits absorb the error of pi, the argument rounding, and for tan the
  // derivative 1 + tan^2 <= 1 + cot^2(pi / 2b) < 2b^2.
  long guard = 40 + 2 * static_cast<long>(mpz_sizeinbase(Integer(static_cast<unsigned long>(angle.b())).get_mpz_t(), 2));
  long work = prec_bits + guard;
  BigFloat x = pi_at(work);
  mpfr_mul_si(x.raw(), x.raw(), static_cast<long>(angle.a()), MPFR_RNDN);
  mpfr_div_ui(x.raw(), x.raw(), static_cast<unsigned long>(angle.b()), MPFR_RNDN);
  BigFloat y(work);
  switch (fn) {
    case TrigFn::Cos: mpfr_cos(y.raw(), x.raw(), MPFR_RNDN); break;
    case TrigFn::Sin: mpfr_sin(y.raw(), x.raw(), MPFR_RNDN); break;
    case TrigFn::Tan: mpfr_tan(y.raw(), x.raw(), MPFR_RNDN); break;
  }
  BigFloat out(prec_bits);
  mpfr_set(out.raw(), y.raw(), MPFR_RNDN);
  return out;
}

// Horner evaluation of an exact polynomial at an approximate point.
template <class C>
BigFloat evaluate(const Polynomial<C>& p, const BigFloat& x) {
  const long prec = x.precision();
  BigFloat acc(prec);
  for (long k = p.degree(); k >= 0; --k) acc = acc * x + BigFloat(Rational(p.coeff(static_cast<std::size_t>(k))), prec);
  return acc;
}

struct Reconstruction {
  Rational value;
  BigFloat residual;  // input - value
};

// First continued-fraction convergent of x with denominator <= max_den that
// lies within tol of x.
inline std::optional<Reconstruction> rational_reconstruct(const BigFloat& x, const Integer& max_den,
                                                          const BigFloat& tol) {
  if (max_den < 1) throw std::invalid_argument("rational_reconstruct: max_den must be positive");
  const Rational exact = x.to_rational();
  const long prec = x.precision() + 64;
  Integer h_prev = 1, h = 0, k_prev = 0, k = 1;  // seeds h_{-1}/k_{-1}, h_{-2}/k_{-2}
  Integer num = exact.get_num(), den = exact.get_den();
  while (den != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer h_next = q * h_prev + h, k_next = q * k_prev + k;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    if (k_prev > max_den) break;
    Rational convergent = make_rational(h_prev, k_prev);
    BigFloat residual(Rational(exact - convergent), prec);
    if (abs_less(residual, tol)) return Reconstruction{convergent, residual};
    Integer r = num - q * den;
    num = den;
    den = r;
  }
  return std::nullopt;
}

// Sign of fn(angle). Exact zeros are decided from the denominator; any other
// value is bounded away from zero and resolved numerically, doubling the
// precision up to kMaxPrecisionBits.
inline int sign_of(const Angle& angle, TrigFn fn, long prec_bits = default_precision()) {
  if (fn == TrigFn::Tan && angle.b() == 2) throw std::domain_error("tan is undefined at odd multiples of pi/2");
  if (fn == TrigFn::Cos && angle.b() == 2) return 0;
  if ((fn == TrigFn::Sin || fn == TrigFn::Tan) && angle.b() == 1) return 0;
  for (long prec = std::max(prec_bits, 64L); prec <= kMaxPrecisionBits; prec *= 2) {
    BigFloat v = trig_at(angle, fn, prec);
    if (abs_less(BigFloat::pow2(4 - prec), v)) return v.sign();
  }
  throw std::runtime_error("sign_of: value not separated from zero at maximum precision");
}

}  // namespace niven
