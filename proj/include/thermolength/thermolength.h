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

/*
 * thermolength C API.
 *
 * Thermodynamic-geometry engine for two-degree-of-freedom systems: energy
 * (Weinhold) and entropy (Ruppeiner) metrics, thermodynamic length along
 * paths, sound speeds, length-work relations on isotherms, metric degeneracy
 * scans and minimal-length paths.
 *
 * Every fallible call returns a tl_status. On failure, tl_last_error_message()
 * returns a description for the calling thread, valid until its next call
 * into the library. Handles are opaque, immutable after creation, and may be
 * shared between threads.
 */
#ifndef THERMOLENGTH_THERMOLENGTH_H
#define THERMOLENGTH_THERMOLENGTH_H

#include <stddef.h>

#if defined(TL_BUILDING_LIBRARY)
#define TL_API __attribute__((visibility("default")))
#else
#define TL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tl_status {
  TL_OK = 0,
  TL_ERR_INVALID_ARGUMENT = 1,
  TL_ERR_CONFIG = 2,
  TL_ERR_NONPHYSICAL_STATE = 3,
  TL_ERR_DEGENERATE_STATE = 4,
  TL_ERR_NEGATIVE_QUADRATIC_FORM = 5,
  TL_ERR_DEPTH_EXCEEDED = 6,
  TL_ERR_UNSUPPORTED_MODEL = 7,
  TL_ERR_IO = 8,
  TL_ERR_INTERNAL = 9
} tl_status;

typedef enum tl_rep { TL_REP_ENERGY = 0, TL_REP_ENTROPY = 1 } tl_rep;

/* Primary axis is s (energy rep) or u (entropy rep). */
typedef enum tl_axis { TL_AXIS_PRIMARY = 0, TL_AXIS_VOLUME = 1 } tl_axis;

typedef enum tl_family {
  TL_FAMILY_IDEAL = 0,
  TL_FAMILY_QUASI_IDEAL = 1,
  TL_FAMILY_VAN_DER_WAALS = 2,
  TL_FAMILY_LINEAR_SV = 3,
  TL_FAMILY_LINEAR_UV = 4
} tl_family;

typedef struct tl_model tl_model;
typedef struct tl_path tl_path;
typedef struct tl_degeneracy tl_degeneracy;
typedef struct tl_geodesic tl_geodesic;

/* x1 is s (energy rep) or u (entropy rep); x2 is the molar volume. */
typedef struct tl_state {
  tl_rep rep;
  double x1;
  double x2;
} tl_state;

typedef struct tl_material {
  double T;
  double p;
  double c_v;
  double c_p;
  double alpha;
  double kappa_T;
  double kappa_S;
} tl_material;

typedef struct tl_jet {
  double value;
  double d1;
  double d2;
  double d11;
  double d12;
  double d22;
} tl_jet;

typedef struct tl_metric {
  tl_rep rep;
  double g11;
  double g12;
  double g22;
} tl_metric;

typedef struct tl_quad_options {
  double abs_tol;
  double rel_tol;
  int max_depth;
  double clamp_eps;
} tl_quad_options;

typedef struct tl_length_result {
  double length;
  double error_estimate;
  long evaluations;
  int touched_degeneracy;
} tl_length_result;

typedef struct tl_sound_speeds {
  double nu_isothermal;
  double nu_adiabatic;
  double rho;
  int degenerate;
} tl_sound_speeds;

typedef struct tl_theorem_report {
  double work;
  double length;
  double predicted_length;
  double residual;
} tl_theorem_report;

typedef struct tl_geodesic_options {
  int max_iterations;
  double relative_decrease_tol;
  double fd_step;
  tl_quad_options quadrature;
} tl_geodesic_options;

TL_API const char* tl_version(void);
TL_API const char* tl_status_name(tl_status status);
TL_API const char* tl_last_error_message(void);

/* Models ------------------------------------------------------------------ */

TL_API tl_status tl_model_from_json(const char* json_text, tl_model** out);
TL_API tl_status tl_model_from_file(const char* path, tl_model** out);
TL_API void tl_model_free(tl_model* model);
TL_API tl_family tl_model_family(const tl_model* model);
/* Parameter lookup by config key: "R", "c_v", "a", "b", "molar_mass". */
TL_API tl_status tl_model_parameter(const tl_model* model, const char* name, double* out);
/* Van der Waals critical point; TL_ERR_UNSUPPORTED_MODEL otherwise. */
TL_API tl_status tl_model_critical_point(const tl_model* model, double* T_c, double* v_c,
                                         double* p_c);

/* Equation of state ------------------------------------------------------- */

TL_API tl_status tl_material_at(const tl_model* model, tl_state point, tl_material* out);
TL_API tl_status tl_pressure(const tl_model* model, double T, double v, double* out);
TL_API tl_status tl_temperature(const tl_model* model, tl_state point, double* out);
TL_API tl_status tl_fundamental_energy(const tl_model* model, double s, double v, tl_jet* out);
TL_API tl_status tl_fundamental_entropy(const tl_model* model, double u, double v, tl_jet* out);
TL_API tl_status tl_convert_state(const tl_model* model, tl_state point, tl_rep target,
                                  tl_state* out);
TL_API tl_status tl_state_from_tv(const tl_model* model, double T, double v, tl_rep rep,
                                  tl_state* out);

/* Metrics ----------------------------------------------------------------- */

TL_API tl_status tl_energy_metric(const tl_model* model, tl_state point, tl_metric* out);
TL_API tl_status tl_entropy_metric(const tl_model* model, tl_state point, tl_metric* out);
/* Same tensor as the two above, finite on the spinodal. */
TL_API tl_status tl_metric_at(const tl_model* model, tl_state point, tl_metric* out);
TL_API tl_status tl_metric_from_hessian(const tl_model* model, tl_state point, double step,
                                        tl_metric* out);
TL_API tl_status tl_det_energy(const tl_model* model, tl_state point, double* out);
TL_API tl_status tl_det_entropy(const tl_model* model, tl_state point, double* out);
TL_API tl_status tl_t4_residual(const tl_model* model, tl_state point, double* out);

/* cells <= 0 selects the default grid of 512 cells. */
TL_API tl_status tl_degeneracy_scan(const tl_model* model, double T, double v_lo, double v_hi,
                                    double tol, int cells, tl_degeneracy** out);
TL_API void tl_degeneracy_free(tl_degeneracy* report);
TL_API size_t tl_degeneracy_root_count(const tl_degeneracy* report);
TL_API tl_status tl_degeneracy_root(const tl_degeneracy* report, size_t index, double* root,
                                    double* residual, double* bracket_lo, double* bracket_hi);

/* Paths and length --------------------------------------------------------- */

TL_API tl_quad_options tl_quad_options_default(void);
TL_API tl_status tl_path_from_json(const char* json_text, tl_path** out);
TL_API tl_status tl_path_from_file(const char* path, tl_path** out);
TL_API void tl_path_free(tl_path* path);
TL_API tl_rep tl_path_rep(const tl_path* path);
/* opts may be NULL for defaults. */
TL_API tl_status tl_length(const tl_model* model, tl_rep metric, const tl_path* path,
                           const tl_quad_options* opts, tl_length_result* out);
TL_API tl_status tl_length_density(const tl_model* model, tl_rep metric, tl_state point,
                                   tl_axis axis, double* out);

TL_API tl_geodesic_options tl_geodesic_options_default(void);
TL_API tl_status tl_geodesic_solve(const tl_model* model, tl_rep metric, tl_state from, tl_state to,
                                   int n_segments, const tl_geodesic_options* opts,
                                   tl_geodesic** out);
TL_API void tl_geodesic_free(tl_geodesic* result);
TL_API size_t tl_geodesic_node_count(const tl_geodesic* result);
TL_API tl_status tl_geodesic_node(const tl_geodesic* result, size_t index, double* x1,
                                  double* x2);
TL_API tl_length_result tl_geodesic_length(const tl_geodesic* result);
TL_API double tl_geodesic_initial_length(const tl_geodesic* result);
TL_API int tl_geodesic_iterations(const tl_geodesic* result);
TL_API int tl_geodesic_converged(const tl_geodesic* result);

/* Acoustics --------------------------------------------------------------- */

TL_API tl_status tl_sound_speeds_at(const tl_model* model, tl_state point, tl_sound_speeds* out);
TL_API tl_status tl_isothermal_sound_speed_from_compressibility(const tl_model* model,
                                                                tl_state point, double* out);
TL_API tl_status tl_length_via_sound(const tl_model* model, tl_state point, tl_axis axis,
                                     double* out);

/* Work relations ------------------------------------------------------------ */

TL_API tl_status tl_work_isotherm(const tl_model* model, double T, double v1, double v2,
                                  double* out);
TL_API tl_status tl_theorem1_check(const tl_model* model, double T, double v1, double v2,
                                   tl_theorem_report* out);
TL_API tl_status tl_theorem2_check(const tl_model* model, double T, double v1, double v2,
                                   tl_theorem_report* out);
/* samples <= 0 selects the default grid (101 points on [0.5, 5]). */
TL_API tl_status tl_ode_solution_check(const tl_model* model, double T, double v_lo, double v_hi,
                                       int samples, double* out);

#ifdef __cplusplus
}
#endif

#endif /* THERMOLENGTH_THERMOLENGTH_H */
