// Copyright 2026 The thermolength Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config_json.hpp"

#include <fstream>
#include <initializer_list>
#include "json.hpp"
#include <sstream>

#include "errors.hpp"

namespace thermolength {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& message) { fail(ErrorCode::Config, message); }

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column anchor.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << what;
    config_error(os.str());
  }
}

void reject_unknown(const json& object, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  if (!object.is_object()) config_error(where + " must be a JSON object");
  for (const auto& item : object.items()) {
    bool known = false;
    for (auto key : allowed) known = known || item.key() == key;
    if (!known) config_error("unknown key \"" + item.key() + "\" in " + where);
  }
}

double number(const json& object, const char* key, double fallback) {
  const auto it = object.find(key);
  if (it == object.end()) return fallback;
  if (!it->is_number()) config_error(std::string("\"") + key + "\" must be a number");
  return it->get<double>();
}

double required_number(const json& object, const char* key) {
  if (!object.contains(key)) config_error(std::string("missing required key \"") + key + "\"");
  return number(object, key, 0.0);
}

std::vector<double> number_array(const json& value, const std::string& what) {
  if (!value.is_array()) config_error(what + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : value) {
    if (!x.is_number()) config_error(what + " must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::pair<double, double> range(const json& object, const char* key) {
  if (!object.contains(key)) config_error(std::string("missing required key \"") + key + "\"");
  const auto values = number_array(object.at(key), std::string("\"") + key + "\"");
  if (values.size() != 2) config_error(std::string("\"") + key + "\" must have two entries");
  return {values[0], values[1]};
}

Rep rep_of(const json& object, bool required) {
  const auto it = object.find("rep");
  if (it == object.end()) {
    if (required) config_error("missing required key \"rep\"");
    return Rep::Energy;
  }
  if (*it == "energy") return Rep::Energy;
  if (*it == "entropy") return Rep::Entropy;
  config_error("\"rep\" must be \"energy\" or \"entropy\"");
}

Family family_of(const json& value) {
  if (!value.is_string()) config_error("\"family\" must be a string");
  const auto name = value.get<std::string>();
  for (auto f : {Family::Ideal, Family::QuasiIdeal, Family::VanDerWaals, Family::LinearSV,
                 Family::LinearUV}) {
    if (name == to_string(f)) return f;
  }
  config_error("unknown family \"" + name + "\"");
}

}  // namespace

Model model_from_json(std::string_view text) {
  const json doc = parse_document(text);
  reject_unknown(doc,
                 {"family", "R", "c_v", "c_p", "a", "b", "molar_mass", "reference", "linear_coeffs"},
                 "model config");
  if (!doc.contains("family")) config_error("missing required key \"family\"");
  ModelConfig c;
  c.family = family_of(doc.at("family"));
  c.R = number(doc, "R", kDefaultGasConstant);
  c.c_v = number(doc, "c_v", 1.5 * c.R);
  c.a = number(doc, "a", 0.0);
  c.b = number(doc, "b", 0.0);
  c.molar_mass = number(doc, "molar_mass", 1.0);
  if (doc.contains("c_p")) c.c_p_override = number(doc, "c_p", 0.0);
  if (const auto it = doc.find("reference"); it != doc.end()) {
    reject_unknown(*it, {"s_ref", "v_ref", "T_ref"}, "\"reference\"");
    c.reference.s_ref = number(*it, "s_ref", c.reference.s_ref);
    c.reference.v_ref = number(*it, "v_ref", c.reference.v_ref);
    c.reference.T_ref = number(*it, "T_ref", c.reference.T_ref);
  }
  if (const auto it = doc.find("linear_coeffs"); it != doc.end()) {
    reject_unknown(*it, {"a_poly", "b_poly"}, "\"linear_coeffs\"");
    if (it->contains("a_poly")) c.a_poly = Polynomial(number_array(it->at("a_poly"), "\"a_poly\""));
    if (it->contains("b_poly")) c.b_poly = Polynomial(number_array(it->at("b_poly"), "\"b_poly\""));
  }
  try {
    return Model(std::move(c));
  } catch (const Error& e) {
    config_error(e.what());
  }
}

PathSpec path_from_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) config_error("path document must be a JSON object");
  if (!doc.contains("variant") || !doc.at("variant").is_string()) {
    config_error("missing required string key \"variant\"");
  }
  const auto variant = doc.at("variant").get<std::string>();
  const std::string where = "\"" + variant + "\" path";
  PathSpec path;
  if (variant == "const_s") {
    reject_unknown(doc, {"variant", "s", "v_range"}, where);
    const auto [lo, hi] = range(doc, "v_range");
    path = ConstS{required_number(doc, "s"), lo, hi};
  } else if (variant == "const_v") {
    reject_unknown(doc, {"variant", "v", "s_range"}, where);
    const auto [lo, hi] = range(doc, "s_range");
    path = ConstV{required_number(doc, "v"), lo, hi};
  } else if (variant == "const_p") {
    reject_unknown(doc, {"variant", "p", "v_range"}, where);
    const auto [lo, hi] = range(doc, "v_range");
    path = ConstP{required_number(doc, "p"), lo, hi};
  } else if (variant == "const_u") {
    reject_unknown(doc, {"variant", "u", "v_range"}, where);
    const auto [lo, hi] = range(doc, "v_range");
    path = ConstU{required_number(doc, "u"), lo, hi};
  } else if (variant == "const_v_entropy") {
    reject_unknown(doc, {"variant", "v", "u_range"}, where);
    const auto [lo, hi] = range(doc, "u_range");
    path = ConstVEntropy{required_number(doc, "v"), lo, hi};
  } else if (variant == "isotherm") {
    reject_unknown(doc, {"variant", "T", "v_range", "rep"}, where);
    const auto [lo, hi] = range(doc, "v_range");
    path = Isotherm{required_number(doc, "T"), lo, hi, rep_of(doc, false)};
  } else if (variant == "polyline") {
    reject_unknown(doc, {"variant", "rep", "nodes"}, where);
    Polyline poly;
    poly.rep = rep_of(doc, true);
    if (!doc.contains("nodes") || !doc.at("nodes").is_array()) {
      config_error("polyline needs a \"nodes\" array");
    }
    for (const auto& node : doc.at("nodes")) {
      const auto xy = number_array(node, "polyline node");
      if (xy.size() != 2) config_error("polyline nodes must be [x1, x2] pairs");
      poly.nodes.push_back({xy[0], xy[1]});
    }
    path = std::move(poly);
  } else if (variant == "parametric") {
    reject_unknown(doc, {"variant", "rep", "xi", "x1", "x2"}, where);
    for (auto key : {"xi", "x1", "x2"}) {
      if (!doc.contains(key)) config_error(std::string("missing required key \"") + key + "\"");
    }
    try {
      path = Parametric::from_table(rep_of(doc, true), number_array(doc.at("xi"), "\"xi\""),
                                    number_array(doc.at("x1"), "\"x1\""),
                                    number_array(doc.at("x2"), "\"x2\""));
    } catch (const Error& e) {
      config_error(e.what());
    }
  } else {
    config_error("unknown path variant \"" + variant + "\"");
  }
  try {
    validate(path);
  } catch (const Error& e) {
    config_error(e.what());
  }
  return path;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "error while reading " + path);
  return os.str();
}

}  // namespace thermolength
