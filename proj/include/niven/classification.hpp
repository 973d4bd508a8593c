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

// Outcome records shared by the cosine/sine and tangent classifiers.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "niven/arith.hpp"
#include "niven/numeric.hpp"
#include "niven/poly.hpp"
#include "niven/trig_minpoly.hpp"

namespace niven {

// value^n = m with n minimal. For n = 1 the value is m itself.
struct RadicalWitness {
  std::uint64_t n = 1;
  Rational m;
  int value_sign = 0;  // -1, 0, +1

  friend bool operator==(const RadicalWitness&, const RadicalWitness&) = default;
};

// Exact proof that tan(angle) is a root of x^n - m: the divisor divides an
// integer annihilator of tan(angle), x^n - m is irreducible, and the numeric
// value of tan(angle) is a root of the divisor.
struct TanCertificate {
  IntPoly annihilator;
  RatPoly divisor;
  std::uint64_t n = 1;
  Rational m;
};

enum class ClassKind { Rational, SimpleRadical, NotSimpleRadical, Undefined };

inline const char* name_of(ClassKind kind) {
  switch (kind) {
    case ClassKind::Rational: return "rational";
    case ClassKind::SimpleRadical: return "simple_radical";
    case ClassKind::NotSimpleRadical: return "not_simple_radical";
    case ClassKind::Undefined: return "undefined";
  }
  return "?";
}

struct Classification {
  TrigFn fn = TrigFn::Cos;
  Angle angle{0, 1};
  ClassKind kind = ClassKind::NotSimpleRadical;
  std::optional<RadicalWitness> witness;
  // Minimal polynomial over Q. Empty for Undefined, and for tangent values
  // that are not simple radicals (their minimal polynomial is never built).
  RatPoly minpoly;
  std::optional<TanCertificate> certificate;

  bool positive() const { return kind == ClassKind::Rational || kind == ClassKind::SimpleRadical; }
};

// value^k when it is rational. A simple n-th radical has a rational k-th
// power exactly when n divides k, and a value that is not a simple radical
// has no rational power at all.
inline std::optional<Rational> rational_power(const Classification& c, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("rational_power: exponent must be positive");
  if (!c.positive() || !c.witness) return std::nullopt;
  const RadicalWitness& w = *c.witness;
  if (k % w.n != 0) return std::nullopt;
  return ipow(w.m, static_cast<long>(k / w.n));
}

// Human-readable signed value, e.g. "-1/2", "(3/4)^(1/2)", "-(3)^(1/2)".
inline std::string value_text(const RadicalWitness& w) {
  if (w.n == 1) return to_string(w.m);
  std::string s = w.value_sign < 0 ? "-" : "";
  return s + "(" + to_string(w.m) + ")^(1/" + std::to_string(w.n) + ")";
}

}  // namespace niven
