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

#include <functional>

#include "eos.hpp"
#include "quadrature.hpp"

namespace thermolength {

struct IsothermSegment {
  double T = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
};

struct TheoremReport {
  double work = 0.0;
  double length = 0.0;
  double predicted_length = 0.0;
  double residual = 0.0;  // |length - predicted| / predicted, 0 when both vanish
};

// W = integral of p(T, v) dv over [v1, v2].
double work_isotherm(const Model& model, const IsothermSegment& seg,
                     const QuadratureOptions& opts = {});

/// Energy-rep isotherm length, integrand sqrt(RT)/(v - b), against W/sqrt(RT).
/// Ideal and QuasiIdeal only; other families throw UnsupportedModel.
TheoremReport theorem1_check(const Model& model, const IsothermSegment& seg,
                             const QuadratureOptions& opts = {});

/// Entropy-rep constant-u length, integrand sqrt(R)/(v - b), against
/// W/sqrt(R T^2).
TheoremReport theorem2_check(const Model& model, const IsothermSegment& seg,
                             const QuadratureOptions& opts = {});

/// Max over a uniform v grid of the relative residuals of
///   dp/dv + p^2/(R T) = 0  and  d(p/T)/dv + (p/T)^2/R = 0
/// for the supplied isotherm p(v) and its derivative.
double ode_residual(const std::function<double(double)>& p, const std::function<double(double)>& dp_dv,
                    double R, double T, double v_lo, double v_hi, int samples);

// ode_residual with the model's own isotherm. Ideal family only.
double ode_solution_check(const Model& model, double T, double v_lo = 0.5, double v_hi = 5.0,
                          int samples = 101);

}  // namespace thermolength
