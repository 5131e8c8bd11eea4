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

#include "thermolength/thermolength.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "acoustics.hpp"
#include "config_json.hpp"
#include "errors.hpp"
#include "geodesic.hpp"
#include "metric.hpp"
#include "pathlen.hpp"
#include "workrel.hpp"

struct tl_model {
  thermolength::Model model;
};

struct tl_path {
  thermolength::PathSpec spec;
};

struct tl_degeneracy {
  thermolength::DegeneracyReport report;
};

struct tl_geodesic {
  thermolength::GeodesicResult result;
};

namespace {

namespace tl = thermolength;

thread_local std::string g_last_error;

tl_status to_status(tl::ErrorCode code) {
  switch (code) {
    case tl::ErrorCode::InvalidArgument:
      return TL_ERR_INVALID_ARGUMENT;
    case tl::ErrorCode::Config:
      return TL_ERR_CONFIG;
    case tl::ErrorCode::NonPhysicalState:
      return TL_ERR_NONPHYSICAL_STATE;
    case tl::ErrorCode::DegenerateState:
      return TL_ERR_DEGENERATE_STATE;
    case tl::ErrorCode::NegativeQuadraticForm:
      return TL_ERR_NEGATIVE_QUADRATIC_FORM;
    case tl::ErrorCode::DepthExceeded:
      return TL_ERR_DEPTH_EXCEEDED;
    case tl::ErrorCode::UnsupportedModel:
      return TL_ERR_UNSUPPORTED_MODEL;
    case tl::ErrorCode::Io:
      return TL_ERR_IO;
  }
  return TL_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes and the thread-local
// message.
template <class Body>
tl_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return TL_OK;
  } catch (const tl::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TL_ERR_INTERNAL;
  }
}

template <class... Ptrs>
void require_non_null(const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) tl::fail(tl::ErrorCode::InvalidArgument, "null pointer argument");
}

tl::Rep rep_in(tl_rep rep) {
  if (rep != TL_REP_ENERGY && rep != TL_REP_ENTROPY) {
    tl::fail(tl::ErrorCode::InvalidArgument, "unknown representation");
  }
  return rep == TL_REP_ENERGY ? tl::Rep::Energy : tl::Rep::Entropy;
}

tl_rep rep_out(tl::Rep rep) { return rep == tl::Rep::Energy ? TL_REP_ENERGY : TL_REP_ENTROPY; }

tl::Axis axis_in(tl_axis axis) {
  if (axis != TL_AXIS_PRIMARY && axis != TL_AXIS_VOLUME) {
    tl::fail(tl::ErrorCode::InvalidArgument, "unknown axis");
  }
  return axis == TL_AXIS_PRIMARY ? tl::Axis::Primary : tl::Axis::Volume;
}

tl::StatePoint state_in(const tl_state& s) { return {rep_in(s.rep), s.x1, s.x2}; }
tl_state state_out(const tl::StatePoint& s) { return {rep_out(s.rep), s.x1, s.x2}; }

tl_metric metric_out(const tl::MetricTensor2& g) { return {rep_out(g.rep), g.g11, g.g12, g.g22}; }

tl_jet jet_out(const tl::SecondOrderJet& j) { return {j.value, j.d1, j.d2, j.d11, j.d12, j.d22}; }

tl::QuadratureOptions quad_in(const tl_quad_options* opts) {
  if (opts == nullptr) return {};
  return {opts->abs_tol, opts->rel_tol, opts->max_depth, opts->clamp_eps};
}

tl_quad_options quad_out(const tl::QuadratureOptions& o) {
  return {o.abs_tol, o.rel_tol, o.max_depth, o.clamp_eps};
}

tl_length_result length_out(const tl::LengthResult& r) {
  return {r.length, r.error_estimate, r.evaluations, r.touched_degeneracy ? 1 : 0};
}

tl_theorem_report report_out(const tl::TheoremReport& r) {
  return {r.work, r.length, r.predicted_length, r.residual};
}

}  // namespace

extern "C" {

const char* tl_version(void) { return "0.1.0"; }

const char* tl_status_name(tl_status status) {
  switch (status) {
    case TL_OK:
      return "OK";
    case TL_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case TL_ERR_CONFIG:
      return "ConfigError";
    case TL_ERR_NONPHYSICAL_STATE:
      return "NonPhysicalState";
    case TL_ERR_DEGENERATE_STATE:
      return "DegenerateState";
    case TL_ERR_NEGATIVE_QUADRATIC_FORM:
      return "NegativeQuadraticForm";
    case TL_ERR_DEPTH_EXCEEDED:
      return "DepthExceeded";
    case TL_ERR_UNSUPPORTED_MODEL:
      return "UnsupportedModel";
    case TL_ERR_IO:
      return "IoError";
    case TL_ERR_INTERNAL:
      return "InternalError";
  }
  return "Unknown";
}

const char* tl_last_error_message(void) { return g_last_error.c_str(); }

tl_status tl_model_from_json(const char* json_text, tl_model** out) {
  return guarded([&] {
    require_non_null(json_text, out);
    *out = nullptr;
    *out = new tl_model{tl::model_from_json(json_text)};
  });
}

tl_status tl_model_from_file(const char* path, tl_model** out) {
  return guarded([&] {
    require_non_null(path, out);
    *out = nullptr;
    const auto text = tl::read_text_file(path);
    *out = new tl_model{tl::model_from_json(text)};
  });
}

void tl_model_free(tl_model* model) { delete model; }

tl_family tl_model_family(const tl_model* model) {
  switch (model->model.family()) {
    case tl::Family::Ideal:
      return TL_FAMILY_IDEAL;
    case tl::Family::QuasiIdeal:
      return TL_FAMILY_QUASI_IDEAL;
    case tl::Family::VanDerWaals:
      return TL_FAMILY_VAN_DER_WAALS;
    case tl::Family::LinearSV:
      return TL_FAMILY_LINEAR_SV;
    case tl::Family::LinearUV:
      return TL_FAMILY_LINEAR_UV;
  }
  return TL_FAMILY_IDEAL;
}

tl_status tl_model_parameter(const tl_model* model, const char* name, double* out) {
  return guarded([&] {
    require_non_null(model, name, out);
    const auto& c = model->model.config();
    const std::string key = name;
    if (key == "R") {
      *out = c.R;
    } else if (key == "c_v") {
      *out = c.c_v;
    } else if (key == "a") {
      *out = c.a;
    } else if (key == "b") {
      *out = c.b;
    } else if (key == "molar_mass") {
      *out = c.molar_mass;
    } else {
      tl::fail(tl::ErrorCode::InvalidArgument, "unknown model parameter \"" + key + "\"");
    }
  });
}

tl_status tl_model_critical_point(const tl_model* model, double* T_c, double* v_c, double* p_c) {
  return guarded([&] {
    require_non_null(model);
    const double T = model->model.critical_temperature();
    if (T_c) *T_c = T;
    if (v_c) *v_c = model->model.critical_volume();
    if (p_c) *p_c = model->model.critical_pressure();
  });
}

tl_status tl_material_at(const tl_model* model, tl_state point, tl_material* out) {
  return guarded([&] {
    require_non_null(model, out);
    const auto m = tl::material_at(model->model, state_in(point));
    *out = {m.T, m.p, m.c_v, m.c_p, m.alpha, m.kappa_T, m.kappa_S};
  });
}

tl_status tl_pressure(const tl_model* model, double T, double v, double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = tl::pressure(model->model, T, v);
  });
}

tl_status tl_temperature(const tl_model* model, tl_state point, double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = tl::temperature_at(model->model, state_in(point));
  });
}

tl_status tl_fundamental_energy(const tl_model* model, double s, double v, tl_jet* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = jet_out(tl::fundamental_energy(model->model, s, v));
  });
}

tl_status tl_fundamental_entropy(const tl_model* model, double u, double v, tl_jet* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = jet_out(tl::fundamental_entropy(model->model, u, v));
  });
}

tl_status tl_convert_state(const tl_model* model, tl_state point, tl_rep target, tl_state* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = state_out(tl::convert_state(model->model, state_in(point), rep_in(target)));
  });
}

tl_status tl_state_from_tv(const tl_model* model, double T, double v, tl_rep rep, tl_state* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = state_out(tl::state_from_tv(model->model, T, v, rep_in(rep)));
  });
}

tl_status tl_energy_metric(const tl_model* model, tl_state point, tl_metric* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = metric_out(tl::energy_metric(model->model, state_in(point)));
  });
}

tl_status tl_entropy_metric(const tl_model* model, tl_state point, tl_metric* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = metric_out(tl::entropy_metric(model->model, state_in(point)));
  });
}

tl_status tl_metric_at(const tl_model* model, tl_state point, tl_metric* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = metric_out(tl::metric_at(model->model, state_in(point)));
  });
}

tl_status tl_metric_from_hessian(const tl_model* model, tl_state point, double step,
                                 tl_metric* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = metric_out(tl::metric_from_hessian(model->model, state_in(point), step));
  });
}

tl_status tl_det_energy(const tl_model* model, tl_state point, double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = tl::det_energy(model->model, state_in(point));
  });
}

tl_status tl_det_entropy(const tl_model* model, tl_state point, double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = tl::det_entropy(model->model, state_in(point));
  });
}

tl_status tl_t4_residual(const tl_model* model, tl_state point, double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = tl::t4_residual(model->model, state_in(point));
  });
}

tl_status tl_degeneracy_scan(const tl_model* model, double T, double v_lo, double v_hi, double tol,
                             int cells, tl_degeneracy** out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = nullptr;
    const int n = cells <= 0 ? tl::kDefaultScanCells : cells;
    *out = new tl_degeneracy{tl::degeneracy_scan(model->model, T, v_lo, v_hi, tol, n)};
  });
}

void tl_degeneracy_free(tl_degeneracy* report) { delete report; }

size_t tl_degeneracy_root_count(const tl_degeneracy* report) {
  return report == nullptr ? 0 : report->report.roots.size();
}

tl_status tl_degeneracy_root(const tl_degeneracy* report, size_t index, double* root,
                             double* residual, double* bracket_lo, double* bracket_hi) {
  return guarded([&] {
    require_non_null(report);
    const auto& r = report->report;
    if (index >= r.roots.size()) tl::fail(tl::ErrorCode::InvalidArgument, "root index out of range");
    if (root) *root = r.roots[index];
    if (residual) *residual = r.residuals[index];
    if (bracket_lo) *bracket_lo = r.brackets[index].first;
    if (bracket_hi) *bracket_hi = r.brackets[index].second;
  });
}

tl_quad_options tl_quad_options_default(void) { return quad_out(tl::QuadratureOptions{}); }

tl_status tl_path_from_json(const char* json_text, tl_path** out) {
  return guarded([&] {
    require_non_null(json_text, out);
    *out = nullptr;
    *out = new tl_path{tl::path_from_json(json_text)};
  });
}

tl_status tl_path_from_file(const char* path, tl_path** out) {
  return guarded([&] {
    require_non_null(path, out);
    *out = nullptr;
    *out = new tl_path{tl::path_from_json(tl::read_text_file(path))};
  });
}

void tl_path_free(tl_path* path) { delete path; }

tl_rep tl_path_rep(const tl_path* path) { return rep_out(tl::path_rep(path->spec)); }

tl_status tl_length(const tl_model* model, tl_rep metric, const tl_path* path,
                    const tl_quad_options* opts, tl_length_result* out) {
  return guarded([&] {
    require_non_null(model, path, out);
    *out = length_out(tl::length(model->model, rep_in(metric), path->spec, quad_in(opts)));
  });
}

tl_status tl_length_density(const tl_model* model, tl_rep metric, tl_state point, tl_axis axis,
                            double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = tl::length_density(model->model, rep_in(metric), state_in(point), axis_in(axis));
  });
}

tl_geodesic_options tl_geodesic_options_default(void) {
  const tl::GeodesicOptions o;
  return {o.max_iterations, o.relative_decrease_tol, o.fd_step, quad_out(o.quadrature)};
}

tl_status tl_geodesic_solve(const tl_model* model, tl_rep metric, tl_state from, tl_state to,
                      int n_segments, const tl_geodesic_options* opts, tl_geodesic** out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = nullptr;
    tl::GeodesicOptions o;
    if (opts != nullptr) {
      o.max_iterations = opts->max_iterations;
      o.relative_decrease_tol = opts->relative_decrease_tol;
      o.fd_step = opts->fd_step;
      o.quadrature = quad_in(&opts->quadrature);
    }
    *out = new tl_geodesic{tl::geodesic(model->model, rep_in(metric), state_in(from),
                                        state_in(to), n_segments, o)};
  });
}

void tl_geodesic_free(tl_geodesic* result) { delete result; }

size_t tl_geodesic_node_count(const tl_geodesic* result) {
  return result == nullptr ? 0 : result->result.path.nodes.size();
}

tl_status tl_geodesic_node(const tl_geodesic* result, size_t index, double* x1, double* x2) {
  return guarded([&] {
    require_non_null(result, x1, x2);
    const auto& nodes = result->result.path.nodes;
    if (index >= nodes.size()) tl::fail(tl::ErrorCode::InvalidArgument, "node index out of range");
    *x1 = nodes[index][0];
    *x2 = nodes[index][1];
  });
}

tl_length_result tl_geodesic_length(const tl_geodesic* result) {
  return length_out(result->result.length);
}

double tl_geodesic_initial_length(const tl_geodesic* result) {
  return result->result.initial_length;
}

int tl_geodesic_iterations(const tl_geodesic* result) { return result->result.iterations; }

int tl_geodesic_converged(const tl_geodesic* result) { return result->result.converged ? 1 : 0; }

tl_status tl_sound_speeds_at(const tl_model* model, tl_state point, tl_sound_speeds* out) {
  return guarded([&] {
    require_non_null(model, out);
    const auto s = tl::sound_speeds(model->model, state_in(point));
    *out = {s.nu_isothermal, s.nu_adiabatic, s.rho, s.degenerate ? 1 : 0};
  });
}

tl_status tl_isothermal_sound_speed_from_compressibility(const tl_model* model, tl_state point,
                                                         double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = tl::isothermal_sound_speed_from_compressibility(model->model, state_in(point));
  });
}

tl_status tl_length_via_sound(const tl_model* model, tl_state point, tl_axis axis, double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = tl::length_via_sound(model->model, state_in(point), axis_in(axis));
  });
}

tl_status tl_work_isotherm(const tl_model* model, double T, double v1, double v2, double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = tl::work_isotherm(model->model, {T, v1, v2});
  });
}

tl_status tl_theorem1_check(const tl_model* model, double T, double v1, double v2,
                            tl_theorem_report* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = report_out(tl::theorem1_check(model->model, {T, v1, v2}));
  });
}

tl_status tl_theorem2_check(const tl_model* model, double T, double v1, double v2,
                            tl_theorem_report* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = report_out(tl::theorem2_check(model->model, {T, v1, v2}));
  });
}

tl_status tl_ode_solution_check(const tl_model* model, double T, double v_lo, double v_hi,
                                int samples, double* out) {
  return guarded([&] {
    require_non_null(model, out);
    *out = samples <= 0 ? tl::ode_solution_check(model->model, T)
                        : tl::ode_solution_check(model->model, T, v_lo, v_hi, samples);
  });
}

}  // extern "C"
