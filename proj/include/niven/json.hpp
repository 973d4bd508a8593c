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

// JSON encoding of classifications, certificates and survey tables.
// Rationals are {"num": "...", "den": "..."} with decimal strings.

#pragma once

#include <json.hpp>

#include "niven/classification.hpp"
#include "niven/survey.hpp"

namespace niven {

inline nlohmann::json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str(10)}, {"den", q.get_den().get_str(10)}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  return make_rational(Integer(j.at("num").get<std::string>(), 10), Integer(j.at("den").get<std::string>(), 10));
}

inline nlohmann::json witness_json(const RadicalWitness& w) {
  return {{"sign", w.value_sign}, {"n", w.n}, {"m", rational_json(w.m)}, {"text", value_text(w)}};
}

inline nlohmann::json certificate_json(const TanCertificate& c) {
  return {{"annihilator", c.annihilator.to_string()},
          {"divisor", c.divisor.to_string()},
          {"n", c.n},
          {"m", rational_json(c.m)}};
}

inline nlohmann::json classification_json(const Classification& c) {
  nlohmann::json j = {{"function", name_of(c.fn)},
                      {"angle", {{"a", c.angle.a()}, {"b", c.angle.b()}}},
                      {"kind", name_of(c.kind)},
                      {"minpoly", c.minpoly.is_zero() ? nlohmann::json(nullptr) : nlohmann::json(c.minpoly.to_string())}};
  j["witness"] = c.witness ? witness_json(*c.witness) : nlohmann::json(nullptr);
  if (c.certificate) j["certificate"] = certificate_json(*c.certificate);
  return j;
}

inline nlohmann::json summary_json(const FunctionSummary& s, bool with_certificates) {
  nlohmann::json j = {{"kind", name_of(s.kind)},
                      {"n", s.n ? nlohmann::json(*s.n) : nlohmann::json(nullptr)},
                      {"m", s.m_abs ? rational_json(*s.m_abs) : nlohmann::json(nullptr)},
                      {"values", nlohmann::json::array()}};
  for (const auto& w : s.values) j["values"].push_back(witness_json(w));
  if (with_certificates) {
    j["certificates"] = nlohmann::json::array();
    for (const auto& c : s.certificates) j["certificates"].push_back(certificate_json(c));
  }
  return j;
}

inline nlohmann::json survey_json(const SurveyTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table)
    rows.push_back({{"b", row.b},
                    {"cos", summary_json(row.cos, false)},
                    {"sin", summary_json(row.sin, false)},
                    {"tan", summary_json(row.tan, true)}});
  return {{"max_b", table.size()}, {"rows", std::move(rows)}};
}

}  // namespace niven
