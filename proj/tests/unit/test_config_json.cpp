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

#include "test_support.hpp"

namespace tltest {
namespace {

std::string config_message(std::string_view text) {
  try {
    model_from_json(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Config) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

TEST(ConfigJson, FixturesLoad) {
  const auto m = model_from_json(read_text_file(TL_FIXTURE_DIR "/vdw_reduced.json"));
  EXPECT_EQ(m.family(), Family::VanDerWaals);
  EXPECT_NEAR(m.critical_temperature(), 1.0, 1e-15);
  const auto i = model_from_json(read_text_file(TL_FIXTURE_DIR "/ideal.json"));
  EXPECT_EQ(i.config().reference.T_ref, 2.0);
  EXPECT_FALSE(i.config().c_p_override.has_value());
  const auto bad = model_from_json(read_text_file(TL_FIXTURE_DIR "/ideal_bad_cp.json"));
  EXPECT_EQ(bad.config().c_p_override.value_or(0.0), 3.0);
}

TEST(ConfigJson, DefaultsApply) {
  const auto m = model_from_json(R"({"family": "ideal"})");
  EXPECT_EQ(m.config().R, kDefaultGasConstant);
  EXPECT_EQ(m.config().c_v, 1.5 * kDefaultGasConstant);
  const auto r = model_from_json(R"({"family": "ideal", "R": 2})");
  EXPECT_EQ(r.config().c_v, 3.0);
}

TEST(ConfigJson, LinearCoefficients) {
  const auto m = model_from_json(
      R"({"family": "linear_sv", "linear_coeffs": {"a_poly": [0, 1], "b_poly": [0.5]}})");
  EXPECT_EQ(m.family(), Family::LinearSV);
  EXPECT_DOUBLE_EQ(fundamental_energy(m, 2.0, 3.0).value, 6.5);
}

TEST(ConfigJson, RejectsInvalidDocuments) {
  EXPECT_NE(config_message(R"({"family": "ideal", "gamma": 1.4})").find("gamma"), std::string::npos);
  EXPECT_NE(config_message(R"({"R": 1})").find("family"), std::string::npos);
  EXPECT_NE(config_message(R"({"family": "plasma"})").find("plasma"), std::string::npos);
  config_message(R"({"family": "ideal", "R": "one"})");
  config_message(R"({"family": "ideal", "R": -1})");
  config_message(R"({"family": "ideal", "b": 0.1})");
  config_message(R"({"family": "van_der_waals", "a": -1, "b": 0.1})");
  config_message(R"({"family": "ideal", "molar_mass": 0})");
  config_message(R"({"family": "ideal", "reference": {"T": 1}})");
  config_message(R"([1, 2])");
}

TEST(ConfigJson, SyntaxErrorsCarryLineAndColumn) {
  const auto msg = config_message("{\n  \"family\": \"ideal\",\n  \"R\": ,\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(ConfigJson, PathVariants) {
  const auto s = path_from_json(R"({"variant": "const_s", "s": 1, "v_range": [1, 2]})");
  ASSERT_TRUE(std::holds_alternative<ConstS>(s));
  EXPECT_EQ(std::get<ConstS>(s).v_to, 2.0);
  const auto iso = path_from_json(R"({"variant": "isotherm", "T": 2, "v_range": [1, 2], "rep": "entropy"})");
  EXPECT_EQ(path_rep(iso), Rep::Entropy);
  const auto poly =
      path_from_json(R"({"variant": "polyline", "rep": "energy", "nodes": [[0, 1], [1, 2], [2, 2]]})");
  EXPECT_EQ(std::get<Polyline>(poly).nodes.size(), 3u);
  const auto par = path_from_json(
      R"({"variant": "parametric", "rep": "energy", "xi": [0, 1, 2, 3], "x1": [0, 1, 2, 3], "x2": [1, 1, 1, 1]})");
  EXPECT_EQ(path_rep(par), Rep::Energy);
}

TEST(ConfigJson, PathErrors) {
  for (const char* text : {
           R"({"variant": "const_s", "v_range": [1, 2]})",
           R"({"variant": "const_s", "s": 1, "v_range": [1]})",
           R"({"variant": "spiral"})",
           R"({"variant": "polyline", "rep": "energy", "nodes": [[0, 1]]})",
           R"({"variant": "polyline", "rep": "energy", "nodes": [[0, 1, 2], [1, 2]]})",
           R"({"variant": "parametric", "rep": "energy", "xi": [0, 0, 1], "x1": [0, 1, 2], "x2": [1, 1, 1]})",
           R"({"variant": "const_v", "v": 1, "s_range": [0, 1], "extra": 1})",
       }) {
    expect_error(ErrorCode::Config, [&] { path_from_json(text); });
  }
}

TEST(ConfigJson, MissingFileIsIoError) {
  expect_error(ErrorCode::Io, [] { read_text_file(TL_FIXTURE_DIR "/does_not_exist.json"); });
}

}  // namespace
}  // namespace tltest
