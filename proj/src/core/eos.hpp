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

#include <optional>
#include <string_view>

#include "polynomial.hpp"

namespace thermolength {

inline constexpr double kDefaultGasConstant = 8.314462618;

enum class Family { Ideal, QuasiIdeal, VanDerWaals, LinearSV, LinearUV };

// Choice of independent coordinates: (s, v) for Energy, (u, v) for Entropy.
enum class Rep { Energy, Entropy };

std::string_view to_string(Family family) noexcept;
std::string_view to_string(Rep rep) noexcept;

struct ReferenceState {
  double s_ref = 0.0;
  double v_ref = 1.0;
  double T_ref = 1.0;
};

/// Raw, unvalidated model parameters. All quantities are molar.
///
/// The constant-c_v families use the fundamental relation
///   T(s, v) = T_ref exp((s - s_ref)/c_v) ((v - b)/(v_ref - b))^(-R/c_v),
///   u(s, v) = c_v T(s, v) - a/v,
/// which reduces to the ideal gas for a = b = 0. The linear families take
/// u = A(s) v + B(s) (LinearSV) or s = A(u) v + B(u) (LinearUV) with A, B
/// given as polynomials in ascending powers.
struct ModelConfig {
  Family family = Family::Ideal;
  double R = kDefaultGasConstant;
  double c_v = 1.5 * kDefaultGasConstant;
  double a = 0.0;
  double b = 0.0;
  double molar_mass = 1.0;
  ReferenceState reference{};
  Polynomial a_poly;
  Polynomial b_poly;
  // Replaces the c_p derived from the equation of state. Only meant for
  // building inconsistent fixtures that the validation suite must reject.
  std::optional<double> c_p_override;
};

/// Validated, immutable model. Construction throws Error(Config) when the
/// parameters violate the family's constraints.
class Model {
 public:
  explicit Model(ModelConfig config);

  const ModelConfig& config() const noexcept { return config_; }
  Family family() const noexcept { return config_.family; }

  // Ideal, QuasiIdeal and VanDerWaals share the constant-c_v closed forms.
  bool has_closed_forms() const noexcept {
    return config_.family != Family::LinearSV &&
           config_.family != Family::LinearUV;
  }

  // Van der Waals critical point (T_c = 8a/(27Rb), v_c = 3b). Throws
  // UnsupportedModel for other families or when a or b vanish.
  double critical_temperature() const;
  double critical_volume() const;
  double critical_pressure() const;

 private:
  ModelConfig config_;
};

struct StatePoint {
  Rep rep = Rep::Energy;
  double x1 = 0.0;  // s (Energy) or u (Entropy)
  double x2 = 0.0;  // v

  static StatePoint energy(double s, double v) { return {Rep::Energy, s, v}; }
  static StatePoint entropy(double u, double v) { return {Rep::Entropy, u, v}; }
  double v() const noexcept { return x2; }
};

struct MaterialState {
  double T = 0.0;
  double p = 0.0;
  double c_v = 0.0;
  double c_p = 0.0;
  double alpha = 0.0;
  double kappa_T = 0.0;
  double kappa_S = 0.0;
};

// A scalar function of two variables with its first and second partials.
struct SecondOrderJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d11 = 0.0;
  double d12 = 0.0;
  double d22 = 0.0;
};

/// The handful of quantities every metric, determinant and sound-speed formula
/// is built from. Stays finite at the spinodal, where dp_dv is exactly zero.
struct LocalThermo {
  double T = 0.0;
  double p = 0.0;
  double c_v = 0.0;
  double dp_dv = 0.0;  // (dp/dv)_T
  double dp_dT = 0.0;  // (dp/dT)_v
};

MaterialState material_at(const Model& model, const StatePoint& point);

double pressure(const Model& model, double T, double v);

// u(s, v) and its partials; u_s = T, u_v = -p.
SecondOrderJet fundamental_energy(const Model& model, double s, double v);

// s(u, v) and its partials; s_u = 1/T, s_v = p/T.
SecondOrderJet fundamental_entropy(const Model& model, double u, double v);

StatePoint convert_state(const Model& model, const StatePoint& point, Rep target);

// Locates the state with temperature T and molar volume v in the given rep.
StatePoint state_from_tv(const Model& model, double T, double v, Rep rep);

double temperature_at(const Model& model, const StatePoint& point);

// Throws NonPhysicalState outside the domain, never DegenerateState.
LocalThermo local_thermo(const Model& model, const StatePoint& point);

// (dp/dv)_T at (T, v); values within rounding of zero are snapped to 0.
double isothermal_dp_dv(const Model& model, double T, double v);

// Converts a Hessian of u(s, v) into minus the Hessian of s(u, v) at a state
// with temperature T and pressure p, and back.
struct Sym2 {
  double m11 = 0.0;
  double m12 = 0.0;
  double m22 = 0.0;
};
Sym2 entropy_form_from_energy_hessian(const Sym2& energy_hessian, double T, double p);
Sym2 energy_hessian_from_entropy_form(const Sym2& entropy_form, double T, double p);

}  // namespace thermolength
