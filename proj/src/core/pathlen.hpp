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

#include "eos.hpp"
#include "metric.hpp"
#include "path.hpp"
#include "quadrature.hpp"

namespace thermolength {

struct LengthResult {
  double length = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  // Set when some quadratic-form value was clamped from slightly below zero.
  bool touched_degeneracy = false;
};

enum class Axis {
  Primary,  // s in the energy rep, u in the entropy rep
  Volume,
};

/// Thermodynamic length of `path` in the metric of rep `metric`.
///
/// General paths integrate sqrt(g11 x1'^2 + 2 g12 x1' x2' + g22 x2'^2) over
/// their parameter. Constant-coordinate paths use the reduced integrands
/// sqrt(g22) (const s, const u), sqrt(g11) (const v) and
/// sqrt(c_p/(T v^2 alpha^2)) (const p). Isotherms become (s(v), v) or (u(v), v)
/// curves with velocities from the Maxwell relation.
LengthResult length(const Model& model, Rep metric, const PathSpec& path,
                    const QuadratureOptions& opts = {});

/// dL/dX along the path that holds the other coordinate fixed:
/// sqrt(g11) for Axis::Primary and sqrt(g22) for Axis::Volume.
double length_density(const Model& model, Rep metric, const StatePoint& point, Axis axis,
                      const QuadratureOptions& opts = {});

// sqrt of a quadratic-form value with the clamp policy applied. `scale` is the
// sum of absolute contributions; sets `clamped` when a small negative value is
// zeroed and throws NegativeQuadraticForm below -clamp_eps * scale.
IntegrandValue guarded_sqrt(double q, double scale, double clamp_eps, bool& clamped);

}  // namespace thermolength
