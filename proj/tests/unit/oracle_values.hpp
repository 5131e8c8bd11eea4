// Copyright 2026 The thermolength Authors
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

// Generated by tests/oracles/generate_oracles.py (mpmath, 40 digits). Do not edit.
#pragma once

#include <array>

namespace oracle {

// T, v, s, u, energy Hessian (uss, usv, uvv), minus entropy Hessian (11, 12, 22).
using MetricRow = std::array<double, 10>;

inline constexpr std::array<MetricRow, 4> kIdealMetric = {{
    {2.0000000000000000, 1.0000000000000000, 0.0, 3.0000000000000000, 1.3333333333333333, -1.3333333333333333, 3.3333333333333333, 0.16666666666666667, 0.0, 1.0000000000000000},
    {0.69999999999999996, 3.5000000000000000, -0.32197021825264863, 1.0499999999999999, 0.46666666666666664, -0.13333333333333332, 0.095238095238095232, 1.3605442176870750, 0.0, 0.081632653061224490},
    {4.5000000000000000, 0.59999999999999998, 0.70556970055850243, 6.7500000000000000, 3.0000000000000000, -5.0000000000000002, 20.833333333333335, 0.032921810699588477, 0.0, 2.7777777777777780},
    {1.3000000000000000, 2.2000000000000002, 0.14228298622558892, 1.9500000000000001, 0.86666666666666670, -0.39393939393939392, 0.44765840220385669, 0.39447731755424060, 0.0, 0.20661157024793385},
}};

inline constexpr std::array<MetricRow, 4> kQuasiMetric = {{
    {2.0000000000000000, 1.0000000000000000, 0.0, 3.0000000000000000, 1.3333333333333333, -1.4814814814814815, 4.1152263374485597, 0.16666666666666667, 0.0, 1.2345679012345679},
    {0.90000000000000002, 0.34999999999999998, -2.4786953897887218, 1.3500000000000000, 0.60000000000000001, -2.4000000000000003, 24.000000000000005, 0.82304526748971189, 0.0, 16.000000000000003},
    {3.7000000000000002, 4.0000000000000000, 2.3891155274287773, 5.5500000000000003, 2.4666666666666668, -0.63247863247863251, 0.40543502081963622, 0.048697345994643287, 0.0, 0.065746219592373439},
    {1.6000000000000001, 1.2500000000000000, -0.089592868938329552, 2.4000000000000001, 1.0666666666666667, -0.92753623188405802, 2.0163831127914305, 0.26041666666666664, 0.0, 0.75614366729678639},
}};

inline constexpr std::array<MetricRow, 5> kVdwMetric = {{
    {1.5000000000000000, 1.0000000000000000, 0.60819766216224657, -0.75000000000000000, 1.0000000000000000, -4.0000000000000000, 19.000000000000000, 0.29629629629629630, -0.88888888888888889, 4.6666666666666667},
    {1.0500000000000000, 0.90000000000000002, -0.36019856573991826, -1.7583333333333332, 0.70000000000000003, -3.2941176470588235, 15.991000612300112, 0.60468631897203321, -2.2395789591556784, 8.7607087986130900},
    {2.5000000000000000, 0.59999999999999998, -1.0690058538531811, -1.2500000000000002, 1.6666666666666667, -16.666666666666668, 232.63888888888893, 0.10666666666666667, -0.88888888888888895, 33.796296296296302},
    {0.80000000000000004, 4.0000000000000000, 4.2112795856644861, 0.45000000000000007, 0.53333333333333336, -0.38787878787878790, 0.34702134986225898, 1.0416666666666666, -0.19531249999999998, 0.11778070118801653},
    {0.90000000000000002, 0.50000000000000000, -3.8548257364731144, -4.6500000000000000, 0.60000000000000001, -9.6000000000000002, 192.00000000000001, 0.82304526748971189, -9.8765432098765427, 161.18518518518518},
}};

// Reduced van der Waals spinodal volumes {T, v_liquid, v_gas}.
inline constexpr std::array<std::array<double, 3>, 4> kVdwSpinodal = {{
    {0.85000000000000000, 0.67167976701095254, 1.7209335983481955},
    {0.90000000000000000, 0.71859718895325338, 1.5285049642671779},
    {0.95000000000000000, 0.78696736441769615, 1.3300356744932006},
    {0.99000000000000000, 0.89460940186678182, 1.1278389549128726},
}};

inline constexpr double kVdwConstSS = 1.6479184330021645;
// van der Waals constant-s length, v 0.8 -> 1.5.
inline constexpr double kVdwConstSLength = 3.7605850487592466;
// van der Waals isotherm T=1.5, v 0.8 -> 3.
inline constexpr double kVdwIsothermEnergy = 2.2461758104447866;
inline constexpr double kVdwIsothermEntropy = 1.8339948693907323;
// van der Waals isobar p=1.2, v 0.7 -> 2.5, energy metric.
inline constexpr double kVdwIsobarLength = 1.2631556610942318;
// ideal energy-rep segment (s, v): (0, 1) -> (1, 2).
inline constexpr double kIdealSegmentEnergy = 1.1019580522151029;
// van der Waals entropy-rep segment (u, v) between (T=2, v=1) and (T=3, v=2).
inline constexpr std::array<double, 4> kVdwSegmentEntropyEnds = {0.0, 1.0000000000000000, 3.0000000000000000, 2.0000000000000000};
inline constexpr double kVdwSegmentEntropy = 1.2734002189439935;
// van der Waals at T=1.5, v=2, molar mass 1: c_p, nu_i, nu_a.
inline constexpr double kVdwSoundCp = 7.0652173913043478;
inline constexpr double kVdwSoundNuI = 1.6613247725836150;
inline constexpr double kVdwSoundNuA = 3.6055512754639893;

}  // namespace oracle
