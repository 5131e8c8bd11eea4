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

#include "geodesic.hpp"

#include "test_support.hpp"

namespace tltest {
namespace {

TEST(Geodesic, EqualEndpointsGiveZeroLength) {
  const auto m = ideal();
  const auto p = StatePoint::energy(0.3, 1.2);
  const auto r = geodesic(m, Rep::Energy, p, p, 8);
  EXPECT_EQ(r.length.length, 0.0);
  EXPECT_TRUE(r.converged);
}

TEST(Geodesic, NeverLongerThanTheStraightLineAndRefinesMonotonically) {
  const auto m = vdw_reduced();
  const auto from = state_from_tv(m, 2.0, 1.0, Rep::Energy);
  const auto to = state_from_tv(m, 2.5, 2.0, Rep::Energy);
  const auto r8 = geodesic(m, Rep::Energy, from, to, 8);
  const auto r16 = geodesic(m, Rep::Energy, from, to, 16);
  EXPECT_LE(r8.length.length, r8.initial_length * (1.0 + 1e-12));
  EXPECT_LE(r16.length.length, r16.initial_length * (1.0 + 1e-12));
  EXPECT_LE(r16.length.length, r8.length.length * (1.0 + 1e-9));
  EXPECT_LT(r16.length.length, r16.initial_length);
  EXPECT_TRUE(r16.converged);
  ASSERT_EQ(r16.path.nodes.size(), 17u);
  EXPECT_EQ(r16.path.nodes.front()[0], from.x1);
  EXPECT_EQ(r16.path.nodes.back()[1], to.x2);
}

TEST(Geodesic, FlatDirectionKeepsTheStraightLine) {
  // Constant-v segment in the ideal entropy rep is already minimal.
  const auto m = ideal();
  const auto r = geodesic(m, Rep::Entropy, StatePoint::entropy(1.0, 1.0),
                          StatePoint::entropy(std::exp(1.0), 1.0), 8);
  EXPECT_NEAR(r.length.length, std::sqrt(1.5), 1e-8);
}

TEST(Geodesic, ArgumentChecks) {
  const auto m = ideal();
  const auto a = StatePoint::energy(0.0, 1.0);
  expect_error(ErrorCode::InvalidArgument, [&] { geodesic(m, Rep::Energy, a, a, 0); });
  expect_error(ErrorCode::InvalidArgument,
               [&] { geodesic(m, Rep::Energy, a, StatePoint::entropy(1.0, 1.0), 4); });
}

}  // namespace
}  // namespace tltest
