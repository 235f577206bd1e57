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

#include "ipb/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json_codec.hpp"

namespace ipb {
namespace detail {

nlohmann::json scalar_json(const Scalar& s) { return nlohmann::json::array({s.real(), s.imag()}); }

nlohmann::json vector_json(std::span<const Scalar> v) {
  auto out = nlohmann::json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

nlohmann::json instance_json(const ProblemInstance& inst, const std::optional<Vector>& coeffs,
                             bool force_gram) {
  nlohmann::json j;
  j["field"] = std::string(to_string(inst.field()));
  const auto* vecs = inst.vectors();
  if (vecs != nullptr && !force_gram) {
    j["mode"] = "vectors";
    j["x"] = vector_json(vecs->x);
    auto y = nlohmann::json::array();
    for (const auto& v : vecs->family.vectors()) y.push_back(vector_json(v));
    j["y"] = std::move(y);
  } else {
    j["mode"] = "gram";
    const GramMatrix& g = inst.bordered_gram();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto row = nlohmann::json::array();
      for (std::size_t k = 0; k < g.size(); ++k) row.push_back(scalar_json(g(i, k)));
      rows.push_back(std::move(row));
    }
    j["bordered_gram"] = std::move(rows);
  }
  if (coeffs) j["coeffs"] = vector_json(*coeffs);
  return j;
}

}  // namespace detail

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw InstanceFormatError(what); }

Scalar parse_scalar(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(std::string("expected [re, im] pair in ") + where);
  }
  return Scalar(j[0].get<double>(), j[1].get<double>());
}

Vector parse_vector(const json& j, const char* where) {
  if (!j.is_array()) fail(std::string("expected an array of [re, im] pairs in ") + where);
  Vector out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(parse_scalar(e, where));
  return out;
}

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

InstanceFile parse_instance_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("instance must be a JSON object");

  InstanceFile out;
  const json& f = field(j, "field");
  if (f == "real") {
    out.candidate.field = FieldMode::kReal;
  } else if (f == "complex") {
    out.candidate.field = FieldMode::kComplex;
  } else {
    fail("field must be \"real\" or \"complex\"");
  }

  const json& mode = field(j, "mode");
  if (mode == "vectors") {
    InstanceCandidate::Vectors v;
    v.x = parse_vector(field(j, "x"), "x");
    const json& y = field(j, "y");
    if (!y.is_array()) fail("y must be an array of vectors");
    for (const auto& e : y) v.y.push_back(parse_vector(e, "y"));
    out.candidate.data = std::move(v);
  } else if (mode == "gram") {
    const json& rows = field(j, "bordered_gram");
    if (!rows.is_array() || rows.empty()) fail("bordered_gram must be a non-empty square array");
    InstanceCandidate::Gram g;
    g.n = rows.size();
    for (const auto& row : rows) {
      Vector r = parse_vector(row, "bordered_gram");
      if (r.size() != g.n) fail("bordered_gram must be square");
      g.row_major.insert(g.row_major.end(), r.begin(), r.end());
    }
    out.candidate.data = std::move(g);
  } else {
    fail("mode must be \"vectors\" or \"gram\"");
  }

  if (const auto it = j.find("coeffs"); it != j.end()) out.coeffs = parse_vector(*it, "coeffs");
  return out;
}

InstanceFile read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string instance_to_json(const ProblemInstance& inst, const std::optional<Vector>& coeffs) {
  return detail::instance_json(inst, coeffs, false).dump(2);
}

std::string instance_to_gram_json(const ProblemInstance& inst,
                                  const std::optional<Vector>& coeffs) {
  return detail::instance_json(inst, coeffs, true).dump(2);
}

}  // namespace ipb
