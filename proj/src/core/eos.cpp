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

#include "eos.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "roots.hpp"

namespace thermolength {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string describe(const StatePoint& point) {
  std::ostringstream os;
  os.precision(17);
  os << (point.rep == Rep::Energy ? "(s=" : "(u=") << point.x1 << ", v=" << point.x2 << ")";
  return os.str();
}

void require_finite_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    fail(ErrorCode::Config, std::string(name) + " must be finite and > 0");
  }
}

void require_finite_nonnegative(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    fail(ErrorCode::Config, std::string(name) + " must be finite and >= 0");
  }
}

void check_volume(const Model& model, double v) {
  if (!std::isfinite(v) || v <= model.config().b) {
    std::ostringstream os;
    os.precision(17);
    os << "molar volume v=" << v << " is outside the domain v > b=" << model.config().b;
    fail(ErrorCode::NonPhysicalState, os.str());
  }
}

double check_temperature(double T, const StatePoint& point) {
  if (!std::isfinite(T) || T <= 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "state " << describe(point) << " implies non-positive temperature T=" << T;
    fail(ErrorCode::NonPhysicalState, os.str());
  }
  return T;
}

// --- constant-c_v families -------------------------------------------------

double log_volume_ratio(const ModelConfig& c, double v) {
  return std::log((v - c.b) / (c.reference.v_ref - c.b));
}

double closed_temperature_sv(const ModelConfig& c, double s, double v) {
  return c.reference.T_ref *
         std::exp((s - c.reference.s_ref) / c.c_v - (c.R / c.c_v) * log_volume_ratio(c, v));
}

double closed_temperature_uv(const ModelConfig& c, double u, double v) {
  return (u + c.a / v) / c.c_v;
}

double closed_entropy(const ModelConfig& c, double T, double v) {
  return c.reference.s_ref + c.c_v * std::log(T / c.reference.T_ref) +
         c.R * log_volume_ratio(c, v);
}

double closed_pressure(const ModelConfig& c, double T, double v) {
  return c.R * T / (v - c.b) - c.a / (v * v);
}

double closed_dp_dv(const ModelConfig& c, double T, double v) {
  const double repulsive = c.R * T / ((v - c.b) * (v - c.b));
  const double attractive = 2.0 * c.a / (v * v * v);
  const double raw = attractive - repulsive;
  // The two terms cancel exactly on the spinodal; anything at rounding level
  // is treated as that zero so determinants vanish there.
  if (std::abs(raw) <= 16.0 * kEps * (repulsive + attractive)) return 0.0;
  return raw;
}

SecondOrderJet closed_energy_jet(const ModelConfig& c, double s, double v) {
  const double T = closed_temperature_sv(c, s, v);
  const double vb = v - c.b;
  const double dT_dv = -(c.R / c.c_v) * T / vb;
  SecondOrderJet j;
  j.value = c.c_v * T - c.a / v;
  j.d1 = T;
  j.d2 = -closed_pressure(c, T, v);
  j.d11 = T / c.c_v;
  j.d12 = dT_dv;
  j.d22 = c.R * c.R * T / (c.c_v * vb * vb) + c.R * T / (vb * vb) - 2.0 * c.a / (v * v * v);
  return j;
}

SecondOrderJet closed_entropy_jet(const ModelConfig& c, double u, double v) {
  const double T = closed_temperature_uv(c, u, v);
  const double vb = v - c.b;
  const double v2 = v * v;
  SecondOrderJet j;
  j.value = closed_entropy(c, T, v);
  j.d1 = 1.0 / T;
  j.d2 = c.R / vb - c.a / (v2 * T);
  j.d11 = -1.0 / (c.c_v * T * T);
  j.d12 = c.a / (c.c_v * v2 * T * T);
  j.d22 = 2.0 * c.a / (v2 * v * T) - c.a * c.a / (c.c_v * v2 * v2 * T * T) - c.R / (vb * vb);
  return j;
}

// --- linear families -------------------------------------------------------

// u = A(s) v + B(s) or s = A(u) v + B(u): the same algebra in either rep.
SecondOrderJet linear_jet(const ModelConfig& c, double x, double v) {
  SecondOrderJet j;
  j.value = c.a_poly(x) * v + c.b_poly(x);
  j.d1 = c.a_poly.derivative(x, 1) * v + c.b_poly.derivative(x, 1);
  j.d2 = c.a_poly(x);
  j.d11 = c.a_poly.derivative(x, 2) * v + c.b_poly.derivative(x, 2);
  j.d12 = c.a_poly.derivative(x, 1);
  j.d22 = 0.0;
  return j;
}

Rep native_rep(const ModelConfig& c) {
  return c.family == Family::LinearUV ? Rep::Entropy : Rep::Energy;
}

// Inverts the native fundamental relation in its first argument.
double invert_linear(const ModelConfig& c, double target, double v, const StatePoint& origin) {
  auto residual = [&](double x) { return c.a_poly(x) * v + c.b_poly(x) - target; };
  const auto root = detail::find_root_outward(residual, 0.0, 0.5);
  if (!root) {
    fail(ErrorCode::NonPhysicalState,
         "cannot invert the linear fundamental relation at " + describe(origin));
  }
  return *root;
}

// Native jet evaluated at a point expressed in the native rep.
struct LinearNative {
  SecondOrderJet jet;
  double T = 0.0;
  double p = 0.0;
  Sym2 energy_hessian;
  Sym2 entropy_form;
};

LinearNative linear_native(const ModelConfig& c, double x1_native, double v,
                           const StatePoint& origin) {
  LinearNative n;
  n.jet = linear_jet(c, x1_native, v);
  if (native_rep(c) == Rep::Energy) {
    n.T = check_temperature(n.jet.d1, origin);
    n.p = -n.jet.d2;
    n.energy_hessian = {n.jet.d11, n.jet.d12, n.jet.d22};
    n.entropy_form = entropy_form_from_energy_hessian(n.energy_hessian, n.T, n.p);
  } else {
    n.T = check_temperature(1.0 / n.jet.d1, origin);
    n.p = n.jet.d2 * n.T;
    n.entropy_form = {-n.jet.d11, -n.jet.d12, -n.jet.d22};
    n.energy_hessian = energy_hessian_from_entropy_form(n.entropy_form, n.T, n.p);
  }
  return n;
}

// Native first coordinate of a point given in either rep.
double linear_native_x1(const ModelConfig& c, const StatePoint& point) {
  if (point.rep == native_rep(c)) return point.x1;
  return invert_linear(c, point.x1, point.x2, point);
}

LinearNative linear_at(const ModelConfig& c, const StatePoint& point) {
  return linear_native(c, linear_native_x1(c, point), point.x2, point);
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::Ideal:
      return "ideal";
    case Family::QuasiIdeal:
      return "quasi_ideal";
    case Family::VanDerWaals:
      return "van_der_waals";
    case Family::LinearSV:
      return "linear_sv";
    case Family::LinearUV:
      return "linear_uv";
  }
  return "unknown";
}

std::string_view to_string(Rep rep) noexcept {
  return rep == Rep::Energy ? "energy" : "entropy";
}

Model::Model(ModelConfig config) : config_(std::move(config)) {
  const auto& c = config_;
  require_finite_positive(c.R, "R");
  require_finite_positive(c.molar_mass, "molar_mass");
  require_finite_nonnegative(c.a, "a");
  require_finite_nonnegative(c.b, "b");
  if (has_closed_forms()) {
    require_finite_positive(c.c_v, "c_v");
    require_finite_positive(c.reference.T_ref, "reference.T_ref");
    if (!std::isfinite(c.reference.s_ref)) fail(ErrorCode::Config, "reference.s_ref must be finite");
    if (!std::isfinite(c.reference.v_ref) || c.reference.v_ref <= c.b) {
      fail(ErrorCode::Config, "reference.v_ref must be finite and > b");
    }
    if (c.family == Family::Ideal && (c.a != 0.0 || c.b != 0.0)) {
      fail(ErrorCode::Config, "the ideal family takes a = b = 0; use quasi_ideal or van_der_waals");
    }
    if (c.family == Family::QuasiIdeal && c.a != 0.0) {
      fail(ErrorCode::Config, "the quasi_ideal family takes a = 0; use van_der_waals");
    }
    if (!c.a_poly.empty() || !c.b_poly.empty()) {
      fail(ErrorCode::Config, "linear_coeffs only apply to the linear_sv and linear_uv families");
    }
    if (c.c_p_override) require_finite_positive(*c.c_p_override, "c_p");
  } else {
    if (c.a != 0.0) fail(ErrorCode::Config, "the linear families do not take an attraction parameter a");
    if (c.c_p_override) fail(ErrorCode::Config, "c_p override only applies to constant-c_v families");
    for (auto poly : {&c.a_poly, &c.b_poly}) {
      for (double coeff : poly->coefficients()) {
        if (!std::isfinite(coeff)) fail(ErrorCode::Config, "linear_coeffs must be finite");
      }
    }
  }
}

double Model::critical_temperature() const {
  if (config_.family != Family::VanDerWaals || config_.a <= 0.0 || config_.b <= 0.0) {
    fail(ErrorCode::UnsupportedModel, "critical point requires van_der_waals with a, b > 0");
  }
  return 8.0 * config_.a / (27.0 * config_.R * config_.b);
}

double Model::critical_volume() const {
  critical_temperature();
  return 3.0 * config_.b;
}

double Model::critical_pressure() const {
  critical_temperature();
  return config_.a / (27.0 * config_.b * config_.b);
}

double temperature_at(const Model& model, const StatePoint& point) {
  const auto& c = model.config();
  check_volume(model, point.x2);
  if (!std::isfinite(point.x1)) fail(ErrorCode::NonPhysicalState, "non-finite coordinate at " + describe(point));
  if (!model.has_closed_forms()) return linear_at(c, point).T;
  const double T = point.rep == Rep::Energy ? closed_temperature_sv(c, point.x1, point.x2)
                                            : closed_temperature_uv(c, point.x1, point.x2);
  return check_temperature(T, point);
}

double isothermal_dp_dv(const Model& model, double T, double v) {
  check_volume(model, v);
  if (model.has_closed_forms()) {
    if (!(T > 0.0) || !std::isfinite(T)) fail(ErrorCode::NonPhysicalState, "temperature must be > 0");
    return closed_dp_dv(model.config(), T, v);
  }
  return local_thermo(model, state_from_tv(model, T, v, Rep::Energy)).dp_dv;
}

LocalThermo local_thermo(const Model& model, const StatePoint& point) {
  const auto& c = model.config();
  const double T = temperature_at(model, point);
  LocalThermo lt;
  lt.T = T;
  if (model.has_closed_forms()) {
    const double v = point.x2;
    lt.p = closed_pressure(c, T, v);
    lt.c_v = c.c_v;
    lt.dp_dT = c.R / (v - c.b);
    lt.dp_dv = closed_dp_dv(c, T, v);
    return lt;
  }
  const auto n = linear_at(c, point);
  const auto& h = n.energy_hessian;
  if (h.m11 == 0.0) {
    fail(ErrorCode::DegenerateState,
         "u_ss vanishes at " + describe(point) + ": heat capacity is unbounded");
  }
  lt.p = n.p;
  lt.c_v = n.T / h.m11;
  lt.dp_dv = -(h.m11 * h.m22 - h.m12 * h.m12) / h.m11;
  lt.dp_dT = -h.m12 / h.m11;
  return lt;
}

MaterialState material_at(const Model& model, const StatePoint& point) {
  const auto lt = local_thermo(model, point);
  if (lt.dp_dv == 0.0) {
    fail(ErrorCode::DegenerateState,
         "(dp/dv)_T = 0 at " + describe(point) + ": isothermal compressibility is unbounded");
  }
  MaterialState m;
  m.T = lt.T;
  m.p = lt.p;
  m.c_v = lt.c_v;
  m.kappa_T = -1.0 / (point.x2 * lt.dp_dv);
  m.alpha = lt.dp_dT * m.kappa_T;
  m.c_p = model.config().c_p_override.value_or(lt.c_v - lt.T * lt.dp_dT * lt.dp_dT / lt.dp_dv);
  m.kappa_S = (m.c_v / m.c_p) * m.kappa_T;
  return m;
}

double pressure(const Model& model, double T, double v) {
  check_volume(model, v);
  if (!std::isfinite(T) || T <= 0.0) {
    fail(ErrorCode::NonPhysicalState, "temperature must be finite and > 0");
  }
  if (model.has_closed_forms()) return closed_pressure(model.config(), T, v);
  return local_thermo(model, state_from_tv(model, T, v, Rep::Energy)).p;
}

SecondOrderJet fundamental_energy(const Model& model, double s, double v) {
  const StatePoint point = StatePoint::energy(s, v);
  temperature_at(model, point);
  const auto& c = model.config();
  if (model.has_closed_forms()) return closed_energy_jet(c, s, v);
  if (c.family == Family::LinearSV) return linear_jet(c, s, v);
  const auto n = linear_at(c, point);
  SecondOrderJet j;
  j.value = invert_linear(c, s, v, point);
  j.d1 = n.T;
  j.d2 = -n.p;
  j.d11 = n.energy_hessian.m11;
  j.d12 = n.energy_hessian.m12;
  j.d22 = n.energy_hessian.m22;
  return j;
}

SecondOrderJet fundamental_entropy(const Model& model, double u, double v) {
  const StatePoint point = StatePoint::entropy(u, v);
  temperature_at(model, point);
  const auto& c = model.config();
  if (model.has_closed_forms()) return closed_entropy_jet(c, u, v);
  if (c.family == Family::LinearUV) return linear_jet(c, u, v);
  const auto n = linear_at(c, point);
  SecondOrderJet j;
  j.value = invert_linear(c, u, v, point);
  j.d1 = 1.0 / n.T;
  j.d2 = n.p / n.T;
  j.d11 = -n.entropy_form.m11;
  j.d12 = -n.entropy_form.m12;
  j.d22 = -n.entropy_form.m22;
  return j;
}

StatePoint convert_state(const Model& model, const StatePoint& point, Rep target) {
  temperature_at(model, point);
  if (point.rep == target) return point;
  StatePoint out{target, 0.0, point.x2};
  out.x1 = point.rep == Rep::Energy ? fundamental_energy(model, point.x1, point.x2).value
                                    : fundamental_entropy(model, point.x1, point.x2).value;
  temperature_at(model, out);
  return out;
}

StatePoint state_from_tv(const Model& model, double T, double v, Rep rep) {
  check_volume(model, v);
  if (!std::isfinite(T) || T <= 0.0) {
    fail(ErrorCode::NonPhysicalState, "temperature must be finite and > 0");
  }
  const auto& c = model.config();
  if (model.has_closed_forms()) {
    if (rep == Rep::Energy) return StatePoint::energy(closed_entropy(c, T, v), v);
    return StatePoint::entropy(c.c_v * T - c.a / v, v);
  }
  // Temperature from the native first derivative: u_s = T or s_u = 1/T.
  const bool energy_native = native_rep(c) == Rep::Energy;
  auto residual = [&](double x) {
    const double d1 = c.a_poly.derivative(x, 1) * v + c.b_poly.derivative(x, 1);
    return energy_native ? d1 - T : d1 - 1.0 / T;
  };
  const auto x = detail::find_root_outward(residual, 0.0, 0.5);
  if (!x) {
    std::ostringstream os;
    os.precision(17);
    os << "no state with T=" << T << ", v=" << v << " exists for this linear model";
    fail(ErrorCode::NonPhysicalState, os.str());
  }
  const StatePoint native{native_rep(c), *x, v};
  return convert_state(model, native, rep);
}

Sym2 entropy_form_from_energy_hessian(const Sym2& h, double T, double p) {
  // ds = (du + p dv)/T, and the entropy form is (1/T) times the energy form.
  const double q = p / T;
  Sym2 f;
  f.m11 = h.m11 / (T * T * T);
  f.m12 = (h.m11 * q + h.m12) / (T * T);
  f.m22 = (q * q * h.m11 + 2.0 * q * h.m12 + h.m22) / T;
  return f;
}

Sym2 energy_hessian_from_entropy_form(const Sym2& f, double T, double p) {
  // du = T ds - p dv, and the energy form is T times the entropy form.
  Sym2 h;
  h.m11 = T * T * T * f.m11;
  h.m12 = T * T * (f.m12 - p * f.m11);
  h.m22 = T * (p * p * f.m11 - 2.0 * p * f.m12 + f.m22);
  return h;
}

}  // namespace thermolength
