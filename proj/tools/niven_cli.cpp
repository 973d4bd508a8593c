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

// Command-line front end:
//
//   niven cyclotomic <n>
//   niven minpoly {cos|sin|2cos} <a/b>
//   niven classify {cos|sin|tan} <a/b> [--max-n N]
//   niven survey [--max-b N] [--threads T]
//   niven verify [--max-n N] [--max-b N]
//
// Every command accepts --json and --prec-bits. Exit status: 0 on success,
// 1 when a verification is refuted, 2 on usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "niven.hpp"
#include "niven/json.hpp"

namespace {

using namespace niven;
using nlohmann::json;

constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  long prec_bits = 0;
  std::uint64_t n = 0;
  std::string fn;
  std::string angle;
  std::uint64_t max_n = 0;
  std::uint64_t max_b = 0;
  unsigned threads = 1;
  bool inject_fault = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_cyclotomic(const Options& o) {
  const IntPoly phi = cyclotomic(o.n);
  if (o.json) {
    json coeffs = json::array();
    for (const auto& c : phi.coefficients()) coeffs.push_back(c.get_str(10));
    emit({{"n", o.n}, {"poly", phi.to_string()}, {"coefficients", coeffs}});
  } else {
    std::cout << phi.to_string() << "\n";
  }
  return 0;
}

int cmd_minpoly(const Options& o) {
  const Angle angle = Angle::parse(o.angle);
  MinPolyResult r = o.fn == "cos" ? minpoly_cos(angle) : o.fn == "sin" ? minpoly_sin(angle) : minpoly_2signed_cos(angle);
  if (o.json) {
    json j = {{"function", o.fn}, {"angle", {{"a", angle.a()}, {"b", angle.b()}}}, {"poly", r.poly.to_string()}};
    if (o.fn == "2cos") j["sign"] = r.sign;
    emit(j);
  } else {
    std::cout << r.poly.to_string() << "\n";
  }
  return 0;
}

std::string power_text(const char* fn, std::uint64_t k, const Angle& angle) {
  std::string s = fn;
  if (k != 1) s += "^" + std::to_string(k);
  return s + "(" + angle.pi_text() + ")";
}

int cmd_classify(const Options& o) {
  const Angle angle = Angle::parse(o.angle);
  const Classification c = o.fn == "cos" ? classify_cos(angle) : o.fn == "sin" ? classify_sin(angle) : classify_tan(angle);
  const char* fn = name_of(c.fn);

  if (o.json) {
    json j = classification_json(c);
    if (o.max_n > 0) {
      j["powers"] = json::array();
      for (std::uint64_t k = 1; k <= o.max_n; ++k) {
        auto p = rational_power(c, k);
        j["powers"].push_back({{"k", k}, {"rational", p.has_value()}, {"value", p ? rational_json(*p) : json(nullptr)}});
      }
    }
    emit(j);
    return 0;
  }

  switch (c.kind) {
    case ClassKind::Undefined:
      std::cout << "undefined\n";
      return 0;
    case ClassKind::NotSimpleRadical:
      std::cout << "not a simple radical\n";
      break;
    case ClassKind::Rational:
      std::cout << "rational: " << power_text(fn, 1, angle) << " = " << to_string(c.witness->m) << "\n";
      break;
    case ClassKind::SimpleRadical:
      std::cout << "simple radical: " << power_text(fn, c.witness->n, angle) << " = " << to_string(c.witness->m) << "\n";
      std::cout << "  value: " << value_text(*c.witness) << "\n";
      break;
  }
  if (!c.minpoly.is_zero()) std::cout << "  minimal polynomial: " << c.minpoly.to_string() << "\n";
  if (c.certificate)
    std::cout << "  certificate: " << c.certificate->divisor.to_string() << " divides "
              << c.certificate->annihilator.to_string() << "\n";
  for (std::uint64_t k = 1; k <= o.max_n; ++k) {
    auto p = rational_power(c, k);
    std::cout << "  " << power_text(fn, k, angle) << ": " << (p ? "rational " + to_string(*p) : std::string("irrational"))
              << "\n";
  }
  return 0;
}

std::string summary_text(const FunctionSummary& s) {
  switch (s.kind) {
    case ClassKind::Undefined: return "undefined";
    case ClassKind::NotSimpleRadical: return "-";
    default: break;
  }
  std::string out = "{";
  for (std::size_t i = 0; i < s.values.size(); ++i) out += (i ? ", " : "") + value_text(s.values[i]);
  return out + "}";
}

int cmd_survey(const Options& o) {
  const SurveyTable table = survey(o.max_b, o.threads);
  if (o.json) {
    emit(survey_json(table));
    return 0;
  }
  std::cout << std::left << std::setw(6) << "b" << std::setw(28) << "cos" << std::setw(28) << "sin"
            << "tan\n";
  for (const SurveyRow& row : table)
    std::cout << std::setw(6) << row.b << std::setw(28) << summary_text(row.cos) << std::setw(28)
              << summary_text(row.sin) << summary_text(row.tan) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const VerifyReport report = run_verification({o.max_n, o.max_b, o.inject_fault});
  if (o.json) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"passed", c.passed()}});
    emit({{"passed", report.passed()}, {"checks", checks}});
  } else {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
      failed += !c.passed();
      std::cout << (c.passed() ? "PASS  " : "FAIL  ") << c.name << " (" << c.checked << " checked";
      if (!c.passed()) std::cout << ", " << c.failed << " failed";
      std::cout << ")\n";
    }
    if (failed == 0)
      std::cout << "all " << report.checks.size() << " checks passed\n";
    else
      std::cout << failed << " of " << report.checks.size() << " checks failed\n";
  }
  return report.passed() ? 0 : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimal polynomials and simple-radical classification of cos, sin and tan at rational multiples of pi"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit a single JSON document");
    sub->add_option("--prec-bits", o.prec_bits, "Working precision for numeric sign resolution (overrides NIVEN_PREC_BITS)")
        ->check(CLI::Range(64L, 1L << 20));
  };

  auto* cyc = app.add_subcommand("cyclotomic", "Print the n-th cyclotomic polynomial");
  cyc->add_option("n", o.n, "Index n >= 1")->required();
  common(cyc);

  auto* mp = app.add_subcommand("minpoly", "Print a monic minimal polynomial over Q");
  mp->add_option("function", o.fn, "cos, sin or 2cos (the latter is 2(-1)^{1+a}cos(a pi/b))")
      ->required()
      ->check(CLI::IsMember({"cos", "sin", "2cos"}));
  mp->add_option("angle", o.angle, "Angle a/b, meaning a*pi/b")->required();
  common(mp);

  auto* cl = app.add_subcommand("classify", "Decide whether a power of a trigonometric value is rational");
  cl->add_option("function", o.fn, "cos, sin or tan")->required()->check(CLI::IsMember({"cos", "sin", "tan"}));
  cl->add_option("angle", o.angle, "Angle a/b, meaning a*pi/b")->required();
  cl->add_option("--max-n", o.max_n, "Also report which powers 1..N are rational");
  common(cl);

  auto* sv = app.add_subcommand("survey", "Classify every reduced angle with denominator up to max-b");
  o.max_b = 6;
  sv->add_option("--max-b", o.max_b, "Largest denominator")->check(CLI::PositiveNumber);
  sv->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  common(sv);

  auto* vf = app.add_subcommand("verify", "Re-check the structural identities and classification results");
  vf->add_option("--max-n", o.max_n, "Largest n for polynomial identities");
  vf->add_option("--max-b", o.max_b, "Largest denominator for classification checks");
  vf->add_flag("--inject-fault", o.inject_fault, "Corrupt one identity to exercise the failure path")
      ->group("");
  common(vf);
  vf->preparse_callback([&o](std::size_t) {
    o.max_n = 200;
    o.max_b = 200;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (o.prec_bits > 0) ::setenv("NIVEN_PREC_BITS", std::to_string(o.prec_bits).c_str(), 1);

  try {
    if (*cyc) return cmd_cyclotomic(o);
    if (*mp) return cmd_minpoly(o);
    if (*cl) return cmd_classify(o);
    if (*sv) return cmd_survey(o);
    if (*vf) return cmd_verify(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefuted;
  }
  return kExitUsage;
}
