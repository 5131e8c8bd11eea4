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

#include "pathlen.hpp"

#include "oracle_values.hpp"
#include "test_support.hpp"

namespace tltest {
namespace {

TEST(PathLength, IdealConstantVolume) {
  // u_ss = T/c_v with T = T_ref exp(s/c_v) at v = 1.
  const auto m = ideal(1.0, 1.5, 1.0);
  const auto r = length(m, Rep::Energy, ConstV{1.0, 0.0, 3.0});
  EXPECT_NEAR(r.length, 2.0 * std::sqrt(1.5) * (std::exp(1.0) - 1.0), 1e-9);
  EXPECT_FALSE(r.touched_degeneracy);
}

TEST(PathLength, IdealIsobar) {
  // Along p = 2: q = p c_p / (R v) dv^2.
  const auto r = length(ideal(), Rep::Energy, ConstP{2.0, 1.0, 4.0});
  EXPECT_NEAR(r.length, 2.0 * std::sqrt(5.0), 1e-9);
}

TEST(PathLength, IdealConstantEnergyInEntropyRep) {
  const auto r = length(ideal(), Rep::Entropy, ConstU{3.0, 1.0, 2.0});
  EXPECT_NEAR(r.length, std::log(2.0), 1e-10);
}

TEST(PathLength, IdealConstantVolumeInEntropyRep) {
  // -s_uu = c_v / u^2 for u = c_v T.
  const auto r = length(ideal(), Rep::Entropy, ConstVEntropy{1.0, 1.0, std::exp(1.0)});
  EXPECT_NEAR(r.length, std::sqrt(1.5), 1e-10);
}

TEST(PathLength, IdealIsothermBothReps) {
  const auto m = ideal();
  EXPECT_NEAR(length(m, Rep::Energy, Isotherm{2.0, 1.0, 2.0, Rep::Energy}).length,
              std::sqrt(2.0) * std::log(2.0), 1e-10);
  EXPECT_NEAR(length(m, Rep::Entropy, Isotherm{2.0, 1.0, 2.0, Rep::Entropy}).length, std::log(2.0),
              1e-10);
}

TEST(PathLength, ZeroWidthPathHasZeroLength) {
  const auto m = vdw_reduced();
  EXPECT_EQ(length(m, Rep::Energy, ConstS{1.0, 2.0, 2.0}).length, 0.0);
  EXPECT_EQ(length(m, Rep::Energy, Isotherm{1.5, 2.0, 2.0, Rep::Energy}).length, 0.0);
}

TEST(PathLength, VanDerWaalsMatchesHighPrecisionOracle) {
  const auto m = vdw_reduced();
  EXPECT_NEAR(length(m, Rep::Energy, ConstS{oracle::kVdwConstSS, 0.8, 1.5}).length,
              oracle::kVdwConstSLength, 1e-8);
  EXPECT_NEAR(length(m, Rep::Energy, Isotherm{1.5, 0.8, 3.0, Rep::Energy}).length,
              oracle::kVdwIsothermEnergy, 1e-8);
  EXPECT_NEAR(length(m, Rep::Entropy, Isotherm{1.5, 0.8, 3.0, Rep::Entropy}).length,
              oracle::kVdwIsothermEntropy, 1e-8);
  EXPECT_NEAR(length(m, Rep::Energy, ConstP{1.2, 0.7, 2.5}).length, oracle::kVdwIsobarLength, 1e-8);
  const auto& e = oracle::kVdwSegmentEntropyEnds;
  EXPECT_NEAR(length(m, Rep::Entropy, Polyline{Rep::Entropy, {{e[0], e[1]}, {e[2], e[3]}}}).length,
              oracle::kVdwSegmentEntropy, 1e-8);
  EXPECT_NEAR(length(ideal(), Rep::Energy, Polyline{Rep::Energy, {{0.0, 1.0}, {1.0, 2.0}}}).length,
              oracle::kIdealSegmentEnergy, 1e-8);
}

TEST(PathLength, MetricRepMustMatchPathRep) {
  expect_error(ErrorCode::InvalidArgument,
               [] { length(ideal(), Rep::Entropy, ConstV{1.0, 0.0, 1.0}); });
}

TEST(PathLength, ReparameterizationInvariance) {
  const auto m = vdw_reduced();
  const auto sa = state_from_tv(m, 1.5, 1.2, Rep::Energy);
  const auto sb = state_from_tv(m, 2.2, 2.6, Rep::Energy);
  const Coord2 a{sa.x1, sa.x2}, b{sb.x1, sb.x2};
  const double direct = length(m, Rep::Energy, Polyline{Rep::Energy, {a, b}}).length;

  Parametric fast;
  fast.rep = Rep::Energy;
  fast.xi_from = 0.0;
  fast.xi_to = 1.0;
  // xi^3 runs the same segment non-uniformly.
  fast.position = [&](double t) {
    const double w = t * t * t;
    return Coord2{a[0] + w * (b[0] - a[0]), a[1] + w * (b[1] - a[1])};
  };
  fast.velocity = [&](double t) {
    const double dw = 3.0 * t * t;
    return Coord2{dw * (b[0] - a[0]), dw * (b[1] - a[1])};
  };
  EXPECT_NEAR(length(m, Rep::Energy, fast).length, direct, 1e-8);

  // Reversed orientation.
  EXPECT_NEAR(length(m, Rep::Energy, Polyline{Rep::Energy, {b, a}}).length, direct, 1e-10);
}

TEST(PathLength, AdditiveUnderSplitting) {
  const auto m = quasi_ideal();
  const double whole = length(m, Rep::Energy, ConstP{1.5, 0.4, 3.0}).length;
  const double parts = length(m, Rep::Energy, ConstP{1.5, 0.4, 1.1}).length +
                       length(m, Rep::Energy, ConstP{1.5, 1.1, 3.0}).length;
  EXPECT_NEAR(whole, parts, 1e-9);
  const Coord2 a{0.0, 1.0}, mid{0.5, 1.5}, b{1.0, 2.0};
  const double poly = length(m, Rep::Energy, Polyline{Rep::Energy, {a, mid, b}}).length;
  const double segs = length(m, Rep::Energy, Polyline{Rep::Energy, {a, mid}}).length +
                      length(m, Rep::Energy, Polyline{Rep::Energy, {mid, b}}).length;
  EXPECT_NEAR(poly, segs, 1e-10);
}

TEST(PathLength, TighterToleranceConvergesToTheSameValue) {
  const auto m = vdw_reduced();
  QuadratureOptions loose;
  loose.abs_tol = loose.rel_tol = 1e-6;
  QuadratureOptions tight;
  tight.abs_tol = tight.rel_tol = 1e-12;
  const PathSpec p = Isotherm{1.2, 0.7, 4.0, Rep::Energy};
  const auto a = length(m, Rep::Energy, p, loose);
  const auto b = length(m, Rep::Energy, p, tight);
  EXPECT_NEAR(a.length, b.length, 1e-5);
  EXPECT_GE(b.evaluations, a.evaluations);
}

TEST(PathLength, ParametricTableMatchesPolyline) {
  const auto m = ideal();
  std::vector<double> xi, x1, x2;
  for (int i = 0; i <= 8; ++i) {
    const double t = i / 8.0;
    xi.push_back(t);
    x1.push_back(t);
    x2.push_back(1.0 + t);
  }
  const auto table = Parametric::from_table(Rep::Energy, xi, x1, x2);
  EXPECT_NEAR(length(m, Rep::Energy, table).length, oracle::kIdealSegmentEnergy, 1e-8);
}

TEST(PathLength, IndefiniteFormIsRejected) {
  // Straight entropy-rep segment through the vdW spinodal region.
  const auto m = vdw_reduced();
  const auto from = state_from_tv(m, 0.9, 0.6, Rep::Energy);
  const auto to = state_from_tv(m, 0.9, 3.0, Rep::Energy);
  expect_error(ErrorCode::NegativeQuadraticForm, [&] {
    length(m, Rep::Energy, Polyline{Rep::Energy, {{from.x1, from.x2}, {to.x1, to.x2}}});
  });
}

TEST(PathLength, NonPhysicalPathIsRejected) {
  expect_error(ErrorCode::NonPhysicalState,
               [] { length(quasi_ideal(), Rep::Energy, ConstS{0.0, 0.05, 1.0}); });
}

TEST(LengthDensity, IdealExamples) {
  const auto m = ideal();
  const auto st = state_from_tv(m, 2.0, 1.0, Rep::Energy);
  EXPECT_NEAR(length_density(m, Rep::Energy, st, Axis::Volume), std::sqrt(10.0 / 3.0), 1e-14);
  EXPECT_NEAR(length_density(m, Rep::Energy, st, Axis::Primary), std::sqrt(4.0 / 3.0), 1e-14);
}

TEST(LengthDensity, LinearVolumeDirectionIsNull) {
  EXPECT_EQ(length_density(linear_sv_sv(), Rep::Energy, StatePoint::energy(1.0, 2.0), Axis::Volume),
            0.0);
}

// Density per unit volume along the isotherm through the state.
double isotherm_density(const Model& m, double T, double v) {
  const auto st = state_from_tv(m, T, v, Rep::Energy);
  const auto lt = local_thermo(m, st);
  return std::sqrt(std::max(0.0, metric_at(m, st).quadratic_form(lt.dp_dT, 1.0)));
}

TEST(LengthDensity, IsothermDirectionCollapsesTowardTheCriticalPoint) {
  const auto m = vdw_reduced();
  double previous = 1e300;
  for (double dT : {0.5, 0.1, 0.01, 0.001}) {
    const double d = isotherm_density(m, 1.0 + dT, 1.0);
    EXPECT_NEAR(d * d, -isothermal_dp_dv(m, 1.0 + dT, 1.0), 1e-10);
    EXPECT_LT(d, previous);
    previous = d;
  }
  EXPECT_LT(previous, 0.1);
  EXPECT_NEAR(isotherm_density(m, 1.0, 1.0), 0.0, 1e-7);
  // The same collapse seen through finite isotherm segments.
  const double near = length(m, Rep::Energy, Isotherm{1.001, 0.999, 1.001, Rep::Energy}).length;
  const double far = length(m, Rep::Energy, Isotherm{1.5, 0.999, 1.001, Rep::Energy}).length;
  EXPECT_LT(near, 0.1 * far);
}

TEST(GuardedSqrt, ClampsOnlyTinyNegatives) {
  bool clamped = false;
  EXPECT_EQ(guarded_sqrt(4.0, 1.0, 1e-12, clamped).value, 2.0);
  EXPECT_FALSE(clamped);
  EXPECT_EQ(guarded_sqrt(-1e-14, 1.0, 1e-12, clamped).value, 0.0);
  EXPECT_TRUE(clamped);
  clamped = false;
  expect_error(ErrorCode::NegativeQuadraticForm, [&] { guarded_sqrt(-1e-6, 1.0, 1e-12, clamped); });
}

}  // namespace
}  // namespace tltest
