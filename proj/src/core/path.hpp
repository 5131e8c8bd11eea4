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

#pragma once

#include <array>
#include <functional>
#include <variant>
#include <vector>

#include "eos.hpp"

namespace thermolength {

using Coord2 = std::array<double, 2>;

// Constant-coordinate paths. Ranges are [from, to] with from <= to.
struct ConstS {
  double s = 0.0;
  double v_from = 0.0, v_to = 0.0;
};
struct ConstV {
  double v = 0.0;
  double s_from = 0.0, s_to = 0.0;
};
struct ConstP {
  double p = 0.0;
  double v_from = 0.0, v_to = 0.0;
};
struct ConstU {
  double u = 0.0;
  double v_from = 0.0, v_to = 0.0;
};
struct ConstVEntropy {
  double v = 0.0;
  double u_from = 0.0, u_to = 0.0;
};

// Resolved against the model into (s(v), v) or (u(v), v) before integration.
struct Isotherm {
  double T = 0.0;
  double v_from = 0.0, v_to = 0.0;
  Rep rep = Rep::Energy;
};

struct Polyline {
  Rep rep = Rep::Energy;
  std::vector<Coord2> nodes;
};

/// Curve xi -> (x1, x2) with its velocity. `breakpoints` lists interior xi
/// values where the velocity may be discontinuous; integration splits there.
struct Parametric {
  Rep rep = Rep::Energy;
  double xi_from = 0.0, xi_to = 1.0;
  std::function<Coord2(double)> position;
  std::function<Coord2(double)> velocity;
  std::vector<double> breakpoints;

  /// Builds a curve from sampled tables with strictly increasing xi. Four or
  /// more samples use modified Akima interpolation; fewer fall back to
  /// piecewise-linear.
  static Parametric from_table(Rep rep, std::vector<double> xi, std::vector<double> x1,
                               std::vector<double> x2);
};

using PathSpec =
    std::variant<ConstS, ConstV, ConstP, ConstU, ConstVEntropy, Isotherm, Polyline, Parametric>;

// The rep a path lives in; constant-coordinate variants imply theirs.
Rep path_rep(const PathSpec& path);

// Checks ordering and size invariants; throws InvalidArgument.
void validate(const PathSpec& path);

}  // namespace thermolength
