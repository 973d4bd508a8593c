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

// Batch re-verification of the structural identities and classification
// theorems over configurable ranges. Backs the CLI's `verify` command.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "niven/cheb.hpp"
#include "niven/cyclotomic.hpp"
#include "niven/radical.hpp"
#include "niven/tangent.hpp"
#include "niven/trig_minpoly.hpp"

namespace niven {

struct CheckResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;

  bool passed() const { return failed == 0; }
};

struct VerifyOptions {
  std::uint64_t max_n = 200;
  std::uint64_t max_b = 200;
  // Corrupts R_2 inside the identity check; exercises the failure path.
  bool inject_fault = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }
};

namespace detail {

inline CheckResult run_check(std::string name, std::uint64_t from, std::uint64_t to,
                             const std::function<bool(std::uint64_t)>& check) {
  CheckResult r{std::move(name)};
  for (std::uint64_t k = from; k <= to; ++k) {
    ++r.checked;
    if (!check(k)) ++r.failed;
  }
  return r;
}

inline bool is_rational_cosine_value(const Rational& v) {
  return v == 0 || v == 1 || v == -1 || v == Rational(1, 2) || v == Rational(-1, 2);
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt) {
  VerifyReport report;
  auto& checks = report.checks;

  checks.push_back(detail::run_check("R_n identity", 0, opt.max_n, [&](std::uint64_t n) {
    IntPoly r = R(n);
    if (opt.inject_fault && n == 2) r += IntPoly::constant(1);
    return satisfies_symmetric_identity(r, n);
  }));
  checks.push_back(detail::run_check("P_n cyclotomic identity", 2, opt.max_n, verify_P_cyclotomic));
  checks.push_back(detail::run_check("P_n degree table", 1, opt.max_n, [](std::uint64_t n) {
    return static_cast<std::uint64_t>(P(n).degree()) == degree_p(n);
  }));
  checks.push_back(detail::run_check("P_n constant-term table", 1, opt.max_n, [](std::uint64_t n) {
    return abs(P(n).coeff(0)) == constant_term_magnitude(n);
  }));

  const std::uint64_t closed_limit = std::min<std::uint64_t>(2048, 10 * std::max<std::uint64_t>(opt.max_n, 1));
  CheckResult closed{"cyclotomic closed forms"};
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (unsigned j = 1; ; ++j) {
      std::uint64_t pj = p;
      for (unsigned i = 1; i < j; ++i) pj *= p;
      if (4 * pj > closed_limit) break;
      ++closed.checked;
      IntPoly phi = phi_4pj_closed(p, j);
      if (phi != cyclotomic(4 * pj) || phi.evaluate(1) != 1) ++closed.failed;
    }
  }
  for (unsigned j = 0; (std::uint64_t{4} << j) <= closed_limit; ++j) {
    ++closed.checked;
    IntPoly phi = phi_power_of_two_closed(j);
    if (phi != cyclotomic(std::uint64_t{4} << j) || phi.evaluate(1) != 2) ++closed.failed;
  }
  checks.push_back(closed);

  CheckResult odd{"odd-prime equation 2^{p^{j-1}(p-1)} - p = 1", 1, 0};
  if (oddprime_solution_search(97, 8) != std::vector<TwoPJ>{{3, 1}}) odd.failed = 1;
  checks.push_back(odd);

  const std::set<std::uint64_t> cos_sin_positive{1, 2, 3, 4, 6}, tan_positive{1, 3, 4, 6};
  CheckResult rational_cos{"rational cosines are 0, +-1/2, +-1"}, cos_sin{"cos/sin simple radicals only at b in {1,2,3,4,6}"},
      tan{"tan simple radicals only at b in {1,3,4,6}"}, constants{"constant-term relation for tan"};
  for (std::uint64_t b = 1; b <= opt.max_b; ++b) {
    for (const Angle& angle : angles_with_denominator(b)) {
      Classification c = classify_cos(angle), s = classify_sin(angle);
      ++rational_cos.checked;
      if (c.kind == ClassKind::Rational && !detail::is_rational_cosine_value(c.witness->m)) ++rational_cos.failed;
      cos_sin.checked += 2;
      cos_sin.failed += (c.positive() != cos_sin_positive.contains(b)) + (s.positive() != cos_sin_positive.contains(b));
      if (b == 2) continue;
      Classification t = classify_tan(angle);
      ++tan.checked;
      if (t.positive() != tan_positive.contains(b)) ++tan.failed;
      if (t.positive() && b > 2) {
        ++constants.checked;
        if (!constants_relation_check(angle)) ++constants.failed;
      }
    }
  }
  checks.push_back(rational_cos);
  checks.push_back(cos_sin);
  checks.push_back(tan);
  checks.push_back(constants);
  return report;
}

}  // namespace niven
