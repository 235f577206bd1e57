// Copyright 2026 The ipbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>

#include "ipb/verify.hpp"
#include "json_codec.hpp"

namespace ipb {
namespace {

std::string field_choice_name(FieldChoice f) {
  switch (f) {
    case FieldChoice::kReal:
      return "real";
    case FieldChoice::kComplex:
      return "complex";
    case FieldChoice::kBoth:
      return "both";
  }
  return "?";
}

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

std::string report_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "variant,checked,held,violated,min_slack,min_rel_slack\n";
  for (const auto& t : report.totals) {
    out << t.variant << ',' << t.checked << ',' << t.held << ',' << t.violated << ',';
    if (t.checked == 0) {
      out << "nan,nan\n";
    } else {
      out << format_double(t.min_slack) << ',' << format_double(t.min_rel_slack) << '\n';
    }
  }
  return out.str();
}

std::string report_json(const SuiteReport& report) {
  using nlohmann::json;
  const GenConfig& c = report.config;
  json j;
  j["config"] = {
      {"seed", c.master_seed},
      {"count", c.count},
      {"n_range", {c.n_range.min, c.n_range.max}},
      {"dim_range", {c.d_range.min, c.d_range.max}},
      {"field", field_choice_name(c.field)},
      {"scale", c.scale},
      {"structured", c.structured_families},
      {"orthonormal_every", c.orthonormal_every},
  };
  j["tolerance"] = {{"abs", report.policy.abs_tol}, {"rel", report.policy.rel_tol}};

  auto totals = json::array();
  for (const auto& t : report.totals) {
    totals.push_back({
        {"variant", t.variant},
        {"checked", t.checked},
        {"held", t.held},
        {"violated", t.violated},
        {"skipped", t.skipped},
        {"min_slack", finite_or_null(t.min_slack)},
        {"min_rel_slack", finite_or_null(t.min_rel_slack)},
    });
  }
  j["totals"] = std::move(totals);

  auto violations = json::array();
  for (const auto& v : report.violations) {
    json e = {{"instance_id", v.instance_id}, {"variant", v.variant}};
    if (v.evaluation) {
      e["lhs"] = v.evaluation->lhs;
      e["rhs"] = v.evaluation->rhs;
      e["slack"] = v.evaluation->slack;
    }
    if (!v.error.empty()) e["error"] = v.error;
    e["instance"] = detail::instance_json(v.instance, v.coeffs, false);
    violations.push_back(std::move(e));
  }
  j["violations"] = std::move(violations);
  return j.dump(2) + "\n";
}

}  // namespace ipb
