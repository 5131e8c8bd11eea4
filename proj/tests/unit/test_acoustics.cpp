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

#include "acoustics.hpp"

#include "metric.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

namespace tltest {
namespace {

TEST(Acoustics, IdealExample) {
  const auto m = ideal();
  const auto st = state_from_tv(m, 2.0, 1.0, Rep::Energy);
  const auto nu = sound_speeds(m, st);
  EXPECT_NEAR(nu.nu_isothermal, std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(nu.nu_adiabatic, std::sqrt(10.0 / 3.0), 1e-14);
  EXPECT_DOUBLE_EQ(nu.rho, 1.0);
  EXPECT_FALSE(nu.degenerate);
}

TEST(Acoustics, VanDerWaalsMatchesHighPrecisionOracle) {
  const auto m = vdw_reduced();
  for (auto rep : {Rep::Energy, Rep::Entropy}) {
    const auto st = state_from_tv(m, 1.5, 2.0, rep);
    const auto nu = sound_speeds(m, st);
    EXPECT_NEAR(nu.nu_isothermal, oracle::kVdwSoundNuI, 1e-12);
    EXPECT_NEAR(nu.nu_adiabatic, oracle::kVdwSoundNuA, 1e-12);
    EXPECT_NEAR(material_at(m, st).c_p, oracle::kVdwSoundCp, 1e-12);
  }
}

TEST(Acoustics, RoutesAgreeOnRandomStates) {
  for (const auto& m : gas_models()) {
    StateSampler sampler(m, 31);
    for (int i = 0; i < 100; ++i) {
      const auto es = sampler.energy();
      const auto ss = convert_state(m, es, Rep::Entropy);
      const auto a = sound_speeds(m, es);
      const auto b = sound_speeds(m, ss);
      const double c = isothermal_sound_speed_from_compressibility(m, es);
      EXPECT_LT(rel(a.nu_isothermal, c), 1e-12);
      EXPECT_LT(rel(b.nu_isothermal, c), 1e-12);
      const auto mat = material_at(m, es);
      EXPECT_LT(rel(a.nu_adiabatic, std::sqrt(mat.c_p / mat.c_v) * a.nu_isothermal), 1e-12);
      EXPECT_GE(a.nu_adiabatic, a.nu_isothermal);
    }
  }
}

TEST(Acoustics, LengthDensityThroughSoundSpeed) {
  for (const auto& m : gas_models()) {
    StateSampler sampler(m, 37);
    for (int i = 0; i < 50; ++i) {
      const auto es = sampler.energy();
      const auto ss = convert_state(m, es, Rep::Entropy);
      for (auto axis : {Axis::Primary, Axis::Volume}) {
        EXPECT_LT(rel(length_via_sound(m, es, axis), length_density(m, Rep::Energy, es, axis)), 1e-10);
        EXPECT_LT(rel(length_via_sound(m, ss, axis), length_density(m, Rep::Entropy, ss, axis)), 1e-10);
      }
    }
  }
}

TEST(Acoustics, CriticalPointIsDegenerate) {
  const auto m = vdw_reduced();
  const auto st = state_from_tv(m, 1.0, 1.0, Rep::Energy);
  const auto nu = sound_speeds(m, st);
  EXPECT_TRUE(nu.degenerate);
  EXPECT_EQ(nu.nu_isothermal, 0.0);
  EXPECT_EQ(nu.nu_adiabatic, 0.0);
  EXPECT_EQ(length_via_sound(m, st, Axis::Volume), 0.0);
}

TEST(Acoustics, SpeedsCollapseApproachingCriticality) {
  const auto m = vdw_reduced();
  double previous = 1e300;
  for (double dT : {0.5, 0.1, 0.01, 0.001}) {
    const double nu = sound_speeds(m, state_from_tv(m, 1.0 + dT, 1.0, Rep::Energy)).nu_isothermal;
    EXPECT_LT(nu, previous);
    previous = nu;
  }
  EXPECT_LT(previous, 0.1);
}

TEST(Acoustics, UnstableStateIsRejected) {
  const auto m = vdw_reduced();
  expect_error(ErrorCode::NonPhysicalState,
               [&] { sound_speeds(m, state_from_tv(m, 0.9, 1.0, Rep::Energy)); });
}

}  // namespace
}  // namespace tltest
