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

// Cyclotomic polynomials Phi_n, built by dividing x^n - 1 by Phi_d for every
// proper divisor d of n, and the closed forms for Phi_{4p^j} and Phi_{2^{j+2}}.

#pragma once

#include <cstdint>
#include <stdexcept>

#include "niven/arith.hpp"
#include "niven/detail/memo.hpp"
#include "niven/poly.hpp"

namespace niven {

// Process-wide memo of Phi_n. Entries are never evicted.
class CyclotomicCache {
 public:
  static CyclotomicCache& global() {
    static CyclotomicCache cache;
    return cache;
  }

  IntPoly get(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
    return table_.get(n, [this](std::uint64_t m) { return compute(m); });
  }

  std::size_t size() const { return table_.size(); }

 private:
  IntPoly compute(std::uint64_t n) const {
    IntPoly quotient = binomial<Integer>(n, Integer(-1));
    for (std::uint64_t d : divisors(n))
      if (d != n) quotient = exact_div(quotient, get(d));
    return quotient;
  }

  detail::MemoTable<std::uint64_t, IntPoly> table_;
};

inline IntPoly cyclotomic(std::uint64_t n) { return CyclotomicCache::global().get(n); }

// a(j, n): the coefficient of x^{phi(n) - j} in Phi_n, zero for j > phi(n).
inline Integer coeff_a(std::uint64_t j, std::uint64_t n) {
  const IntPoly phi_n = cyclotomic(n);
  const auto deg = static_cast<std::uint64_t>(phi_n.degree());
  if (j > deg) return 0;
  return phi_n.coeff(deg - j);
}

// (x^{2p^j} + 1) / (x^{2p^{j-1}} + 1) for an odd prime p and j >= 1.
inline IntPoly phi_4pj_closed(std::uint64_t p, unsigned j) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("phi_4pj_closed: p must be an odd prime");
  if (j == 0) throw std::invalid_argument("phi_4pj_closed: j must be at least 1");
  std::uint64_t lower = 1;
  for (unsigned i = 1; i < j; ++i) lower *= p;
  return exact_div(binomial<Integer>(2 * lower * p, Integer(1)), binomial<Integer>(2 * lower, Integer(1)));
}

// x^{2^{j+1}} + 1
inline IntPoly phi_power_of_two_closed(unsigned j) {
  if (j > 60) throw std::invalid_argument("phi_power_of_two_closed: j too large");
  return binomial<Integer>(std::uint64_t{1} << (j + 1), Integer(1));
}

}  // namespace niven
