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

#include "workrel.hpp"

#include "pathlen.hpp"
#include "test_support.hpp"

namespace tltest {
namespace {

TEST(WorkRelations, IsothermWorkExamples) {
  EXPECT_NEAR(work_isotherm(ideal(), {2.0, 1.0, 2.0}), 2.0 * std::log(2.0), 1e-10);
  const auto q = quasi_ideal();
  EXPECT_NEAR(work_isotherm(q, {2.0, 1.0, 2.0}), 2.0 * std::log(1.9 / 0.9), 1e-10);
  const auto v = vdw_reduced();
  const double R = 8.0 / 3.0, a = 3.0, b = 1.0 / 3.0;
  EXPECT_NEAR(work_isotherm(v, {1.5, 0.8, 3.0}),
              R * 1.5 * std::log((3.0 - b) / (0.8 - b)) + a * (1.0 / 3.0 - 1.0 / 0.8), 1e-9);
  EXPECT_EQ(work_isotherm(v, {1.5, 2.0, 2.0}), 0.0);
}

TEST(WorkRelations, TheoremExamples) {
  const auto m = ideal();
  const auto t1 = theorem1_check(m, {2.0, 1.0, 2.0});
  EXPECT_NEAR(t1.length, std::sqrt(2.0) * std::log(2.0), 1e-10);
  EXPECT_NEAR(t1.predicted_length, t1.length, 1e-10);
  EXPECT_LT(t1.residual, 1e-8);
  const auto t2 = theorem2_check(m, {2.0, 1.0, 2.0});
  EXPECT_NEAR(t2.length, std::log(2.0), 1e-10);
  EXPECT_LT(t2.residual, 1e-8);
  const auto q1 = theorem1_check(quasi_ideal(), {2.0, 1.0, 2.0});
  EXPECT_NEAR(q1.length, std::sqrt(2.0) * std::log(1.9 / 0.9), 1e-10);
  EXPECT_LT(q1.residual, 1e-8);
}

TEST(WorkRelations, TheoremLengthsMatchPathIntegrals) {
  for (const auto& m : {ideal(), quasi_ideal()}) {
    for (double T : {0.5, 1.0, 3.0}) {
      const IsothermSegment seg{T, 0.4, 4.0};
      EXPECT_NEAR(theorem1_check(m, seg).length,
                  length(m, Rep::Energy, Isotherm{T, 0.4, 4.0, Rep::Energy}).length, 1e-9);
      EXPECT_NEAR(theorem2_check(m, seg).length,
                  length(m, Rep::Entropy, Isotherm{T, 0.4, 4.0, Rep::Entropy}).length, 1e-9);
    }
  }
}

TEST(WorkRelations, LengthRatioIsSqrtT) {
  const auto m = quasi_ideal();
  for (double T : {0.5, 1.7, 4.0}) {
    const IsothermSegment seg{T, 0.3, 2.5};
    EXPECT_NEAR(theorem1_check(m, seg).length / theorem2_check(m, seg).length, std::sqrt(T), 1e-10);
  }
}

TEST(WorkRelations, GasConstantScaling) {
  // L_u scales with sqrt(R); W with R.
  const auto a = ideal(1.0);
  const auto b = ideal(4.0, 6.0);
  const IsothermSegment seg{1.3, 1.0, 3.0};
  EXPECT_NEAR(theorem1_check(b, seg).length, 2.0 * theorem1_check(a, seg).length, 1e-10);
  EXPECT_NEAR(work_isotherm(b, seg), 4.0 * work_isotherm(a, seg), 1e-9);
}

TEST(WorkRelations, TheoremsRequireTheHypothesis) {
  expect_error(ErrorCode::UnsupportedModel, [] { theorem1_check(vdw_reduced(), {1.5, 1.0, 2.0}); });
  expect_error(ErrorCode::UnsupportedModel, [] { theorem2_check(linear_sv_sv(), {1.5, 1.0, 2.0}); });
  expect_error(ErrorCode::NonPhysicalState, [] { theorem1_check(quasi_ideal(), {1.0, 0.05, 2.0}); });
  expect_error(ErrorCode::InvalidArgument, [] { theorem1_check(ideal(), {1.0, 2.0, 1.0}); });
}

TEST(WorkRelations, IsothermOdeHoldsForIdealGas) {
  for (double T : {0.5, 1.0, 2.0, 5.0}) EXPECT_LE(ode_solution_check(ideal(), T), 1e-12);
  expect_error(ErrorCode::UnsupportedModel, [] { ode_solution_check(vdw_reduced(), 1.5); });
}

TEST(WorkRelations, PerturbedPressureViolatesOde) {
  const double R = 1.0, T = 2.0, eps = 1e-3;
  auto p = [&](double v) { return R * T / v * (1.0 + eps * v); };
  auto dp = [&](double v) { return -R * T / (v * v); };
  EXPECT_GT(ode_residual(p, dp, R, T, 0.5, 5.0, 101), 1e-6);
  auto exact = [&](double v) { return R * T / v; };
  EXPECT_LE(ode_residual(exact, dp, R, T, 0.5, 5.0, 101), 1e-15);
}

}  // namespace
}  // namespace tltest
