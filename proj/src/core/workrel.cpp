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

#include "workrel.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace thermolength {

namespace {

void check_segment(const Model& model, const IsothermSegment& seg) {
  if (!std::isfinite(seg.T) || seg.T <= 0.0) {
    fail(ErrorCode::NonPhysicalState, "isotherm temperature must be > 0");
  }
  if (!std::isfinite(seg.v1) || !std::isfinite(seg.v2) || seg.v1 <= model.config().b) {
    fail(ErrorCode::NonPhysicalState, "isotherm segment must satisfy b < v1");
  }
  if (seg.v2 < seg.v1) fail(ErrorCode::InvalidArgument, "isotherm segment must have v1 <= v2");
}

void require_theorem_hypothesis(const Model& model) {
  if (model.family() != Family::Ideal && model.family() != Family::QuasiIdeal) {
    fail(ErrorCode::UnsupportedModel,
         "length-work theorems assume p = RT/(v - b); family " +
             std::string(to_string(model.family())) + " does not satisfy it");
  }
}

double relative_residual(double length, double predicted) {
  if (length == 0.0 && predicted == 0.0) return 0.0;
  return std::abs(length - predicted) / std::abs(predicted);
}

TheoremReport theorem_check(const Model& model, const IsothermSegment& seg, double prefactor,
                            double work_scale, const QuadratureOptions& opts) {
  require_theorem_hypothesis(model);
  check_segment(model, seg);
  const double b = model.config().b;
  TheoremReport r;
  r.work = work_isotherm(model, seg, opts);
  r.length = integrate([&](double v) { return prefactor / (v - b); }, seg.v1, seg.v2, opts).value;
  r.predicted_length = r.work / work_scale;
  r.residual = relative_residual(r.length, r.predicted_length);
  return r;
}

}  // namespace

double work_isotherm(const Model& model, const IsothermSegment& seg, const QuadratureOptions& opts) {
  check_segment(model, seg);
  if (seg.v1 == seg.v2) return 0.0;
  return integrate([&](double v) { return pressure(model, seg.T, v); }, seg.v1, seg.v2, opts).value;
}

TheoremReport theorem1_check(const Model& model, const IsothermSegment& seg,
                             const QuadratureOptions& opts) {
  const double rt = std::sqrt(model.config().R * seg.T);
  return theorem_check(model, seg, rt, rt, opts);
}

TheoremReport theorem2_check(const Model& model, const IsothermSegment& seg,
                             const QuadratureOptions& opts) {
  const double sqrt_r = std::sqrt(model.config().R);
  return theorem_check(model, seg, sqrt_r, sqrt_r * seg.T, opts);
}

double ode_residual(const std::function<double(double)>& p, const std::function<double(double)>& dp_dv,
                    double R, double T, double v_lo, double v_hi, int samples) {
  if (samples < 1) fail(ErrorCode::InvalidArgument, "ode check needs at least one sample");
  double worst = 0.0;
  auto relative = [](double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x + y) / scale;
  };
  for (int i = 0; i < samples; ++i) {
    const double v =
        samples == 1 ? v_lo : v_lo + (v_hi - v_lo) * static_cast<double>(i) / (samples - 1);
    const double pv = p(v);
    const double dpv = dp_dv(v);
    // Energy form, then the same relation for p/T at fixed T.
    worst = std::max(worst, relative(dpv, pv * pv / (R * T)));
    const double q = pv / T;
    worst = std::max(worst, relative(dpv / T, q * q / R));
  }
  return worst;
}

double ode_solution_check(const Model& model, double T, double v_lo, double v_hi, int samples) {
  if (model.family() != Family::Ideal) {
    fail(ErrorCode::UnsupportedModel, "the isotherm ODE check applies to the ideal family only");
  }
  if (!(v_lo > 0.0) || v_hi < v_lo) fail(ErrorCode::InvalidArgument, "invalid v grid");
  return ode_residual([&](double v) { return pressure(model, T, v); },
                      [&](double v) { return isothermal_dp_dv(model, T, v); }, model.config().R, T,
                      v_lo, v_hi, samples);
}

}  // namespace thermolength
