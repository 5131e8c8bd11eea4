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
#include "pathlen.hpp"

namespace thermolength {

struct SoundSpeeds {
  double nu_isothermal = 0.0;
  double nu_adiabatic = 0.0;
  double rho = 0.0;  // molar_mass / v
  // (dp/dv)_T = 0: both speeds are reported as 0 since kappa_T and c_p are
  // unbounded there.
  bool degenerate = false;
};

/// Sound speeds through the metric determinant of the point's rep:
///   nu_i^2 = v c_v det_u/(T rho) = v c_v T^3 det_s/rho,  nu_a = sqrt(c_p/c_v) nu_i.
/// Throws NonPhysicalState at mechanically unstable states (det < 0).
SoundSpeeds sound_speeds(const Model& model, const StatePoint& point);

// sqrt(1/(kappa_T rho)), the compressibility route to nu_i.
double isothermal_sound_speed_from_compressibility(const Model& model, const StatePoint& point);

/// Length density dL/dX expressed through the sound speeds. At a degenerate
/// state only the energy-rep volume density is defined (it is 0); the other
/// directions throw DegenerateState.
double length_via_sound(const Model& model, const StatePoint& point, Axis axis);

}  // namespace thermolength
