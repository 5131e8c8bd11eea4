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

#include <cmath>

#include "errors.hpp"
#include "metric.hpp"

namespace thermolength {

SoundSpeeds sound_speeds(const Model& model, const StatePoint& point) {
  const double v = point.v();
  const double T = temperature_at(model, point);
  SoundSpeeds out;
  out.rho = model.config().molar_mass / v;
  const double det = point.rep == Rep::Energy ? det_energy(model, point) : det_entropy(model, point);
  if (det == 0.0) {
    out.degenerate = true;
    return out;
  }
  if (det < 0.0) {
    fail(ErrorCode::NonPhysicalState,
         "metric determinant is negative: mechanically unstable state has no real sound speed");
  }
  const auto m = material_at(model, point);
  if (point.rep == Rep::Energy) {
    out.nu_isothermal = std::sqrt(v * m.c_v * det / (T * out.rho));
    out.nu_adiabatic = std::sqrt(v * m.c_p * det / (T * out.rho));
  } else {
    const double T3 = T * T * T;
    out.nu_isothermal = std::sqrt(v * m.c_v * T3 * det / out.rho);
    out.nu_adiabatic = std::sqrt(v * m.c_p * T3 * det / out.rho);
  }
  return out;
}

double isothermal_sound_speed_from_compressibility(const Model& model, const StatePoint& point) {
  const auto m = material_at(model, point);
  const double rho = model.config().molar_mass / point.v();
  if (m.kappa_T <= 0.0) {
    fail(ErrorCode::NonPhysicalState, "negative isothermal compressibility");
  }
  return std::sqrt(1.0 / (m.kappa_T * rho));
}

double length_via_sound(const Model& model, const StatePoint& point, Axis axis) {
  const auto nu = sound_speeds(model, point);
  const double v = point.v();
  if (nu.degenerate) {
    if (point.rep == Rep::Energy && axis == Axis::Volume) return 0.0;
    fail(ErrorCode::DegenerateState,
         "length density through sound speed is indeterminate where (dp/dv)_T = 0");
  }
  const auto m = material_at(model, point);
  if (point.rep == Rep::Energy) {
    if (axis == Axis::Volume) return nu.nu_adiabatic * std::sqrt(nu.rho / v);
    return nu.nu_adiabatic * std::sqrt(m.T * m.kappa_T * nu.rho / m.c_p);
  }
  if (axis == Axis::Volume) {
    const double x = m.T * m.alpha - m.p * m.kappa_T;
    const double bracket = 1.0 + v * x * x / (m.T * m.c_v * m.kappa_T);
    return nu.nu_isothermal * std::sqrt(nu.rho / (m.T * v) * bracket);
  }
  return nu.nu_isothermal * std::sqrt(nu.rho * m.kappa_T / (m.T * m.T * m.c_v));
}

}  // namespace thermolength
