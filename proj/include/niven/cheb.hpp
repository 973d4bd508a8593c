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

// R_n: the monic integer polynomial with x^n + x^{-n} = R_n(x + x^{-1}).
// These are the Chebyshev polynomials of the first kind rescaled to
// R_n(2t) = 2 T_n(t).

#pragma once

#include <cstdint>

#include "niven/detail/memo.hpp"
#include "niven/poly.hpp"

namespace niven {

// R_0 = 2, R_1 = x, R_k = x R_{k-1} - R_{k-2}.
inline IntPoly R(std::uint64_t n) {
  static detail::MemoTable<std::uint64_t, IntPoly> memo;
  return memo.get(n, [](std::uint64_t k) {
    IntPoly prev = IntPoly::constant(2), cur = IntPoly::monomial(1);
    if (k == 0) return prev;
    const IntPoly x = IntPoly::monomial(1);
    for (std::uint64_t i = 2; i <= k; ++i) {
      IntPoly next = x * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  });
}

// Checks candidate(x + 1/x) == x^n + x^{-n} symbolically.
inline bool satisfies_symmetric_identity(const IntPoly& candidate, std::uint64_t n) {
  const auto k = static_cast<long>(n);
  return substitute_symmetric(candidate) == LaurentPoly::monomial(k) + LaurentPoly::monomial(-k);
}

inline bool verify_R(std::uint64_t n) { return satisfies_symmetric_identity(R(n), n); }

}  // namespace niven
