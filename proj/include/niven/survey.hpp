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

// Exhaustive classification of cos, sin and tan over all reduced angles with
// denominator up to a bound, aggregated per denominator.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "niven/classification.hpp"
#include "niven/radical.hpp"
#include "niven/tangent.hpp"
#include "niven/trig_minpoly.hpp"

namespace niven {

// The outcome of one function over every angle a/b with a fixed b.
struct FunctionSummary {
  ClassKind kind = ClassKind::NotSimpleRadical;
  std::optional<std::uint64_t> n;  // shared exponent of the positive values
  std::optional<Rational> m_abs;   // shared |m| of the positive values
  std::vector<RadicalWitness> values;  // distinct, by sign then |m|
  std::vector<TanCertificate> certificates;  // tan only, one per value sign
};

struct SurveyRow {
  std::uint64_t b = 1;
  FunctionSummary cos, sin, tan;
};

using SurveyTable = std::vector<SurveyRow>;

inline FunctionSummary summarize(const std::vector<Classification>& classes) {
  if (classes.empty()) throw std::invalid_argument("summarize: no classifications");
  FunctionSummary s;
  s.kind = classes.front().kind;
  std::map<int, TanCertificate> certs;
  for (const auto& c : classes) {
    if (c.kind != s.kind) throw std::logic_error("summarize: mixed kinds for one denominator");
    if (!c.witness) continue;
    if (std::find(s.values.begin(), s.values.end(), *c.witness) == s.values.end()) s.values.push_back(*c.witness);
    if (c.certificate) certs.try_emplace(c.witness->value_sign, *c.certificate);
  }
  std::sort(s.values.begin(), s.values.end(), [](const RadicalWitness& x, const RadicalWitness& y) {
    if (x.value_sign != y.value_sign) return x.value_sign < y.value_sign;
    return abs(x.m) < abs(y.m);
  });
  if (!s.values.empty()) {
    const RadicalWitness& first = s.values.front();
    bool shared = std::all_of(s.values.begin(), s.values.end(), [&](const RadicalWitness& w) {
      return w.n == first.n && abs(w.m) == abs(first.m);
    });
    if (shared) {
      s.n = first.n;
      s.m_abs = abs(first.m);
    }
  }
  for (auto& [sign, cert] : certs) s.certificates.push_back(std::move(cert));
  return s;
}

inline SurveyRow survey_row(std::uint64_t b) {
  std::vector<Classification> cos, sin, tan;
  for (const Angle& angle : angles_with_denominator(b)) {
    cos.push_back(classify_cos(angle));
    sin.push_back(classify_sin(angle));
    tan.push_back(classify_tan(angle));
  }
  return {b, summarize(cos), summarize(sin), summarize(tan)};
}

// Rows for b = 1..max_b in ascending order. Denominators are distributed
// over `threads` workers; the result does not depend on the thread count.
inline SurveyTable survey(std::uint64_t max_b, unsigned threads = 1) {
  if (max_b == 0) throw std::invalid_argument("survey: max_b must be positive");
  SurveyTable rows(max_b);
  std::atomic<std::uint64_t> next{1};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (std::uint64_t b = next++; b <= max_b; b = next++) rows[b - 1] = survey_row(b);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = max_b + 1;
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(max_b, 256))));
  if (threads == 1) {
    work();
    if (error) std::rethrow_exception(error);
    return rows;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  pool.clear();
  if (error) std::rethrow_exception(error);
  return rows;
}

}  // namespace niven
