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

#include <utility>
#include <vector>

#include "eos.hpp"

namespace thermolength {

enum class Definiteness {
  PositiveDefinite,
  PositiveSemidefinite,
  Indefinite,
  NegativeSemidefinite,
  NegativeDefinite,
};

// Symmetric 2x2 metric; g21 = g12 is implied.
struct MetricTensor2 {
  Rep rep = Rep::Energy;
  double g11 = 0.0;
  double g12 = 0.0;
  double g22 = 0.0;

  double det() const noexcept { return g11 * g22 - g12 * g12; }
  double quadratic_form(double d1, double d2) const noexcept {
    return g11 * d1 * d1 + 2.0 * g12 * d1 * d2 + g22 * d2 * d2;
  }
  Definiteness definiteness() const noexcept;
};

/// Weinhold metric from material functions at an EnergyRep point:
///   g11 = T/c_v, g12 = -T alpha/(kappa_T c_v), g22 = c_p/(v kappa_T c_v).
/// Throws DegenerateState where kappa_T is unbounded. The linear families have
/// no finite material description in general and return the exact Hessian of
/// u(s, v) instead.
MetricTensor2 energy_metric(const Model& model, const StatePoint& point);

/// Ruppeiner metric (minus the Hessian of s(u, v)) from material functions at
/// an EntropyRep point. Same degeneracy behaviour as energy_metric.
MetricTensor2 entropy_metric(const Model& model, const StatePoint& point);

/// Metric in the point's own rep, algebraically identical to energy_metric /
/// entropy_metric but written through (dp/dv)_T and (dp/dT)_v so that it stays
/// finite on the spinodal. This is what path integrals evaluate.
MetricTensor2 metric_at(const Model& model, const StatePoint& point);

/// Central second differences of u(s, v) (EnergyRep) or -s(u, v) (EntropyRep).
/// The step in each coordinate is step * max(1, |x|).
MetricTensor2 metric_from_hessian(const Model& model, const StatePoint& point, double step);

// Determinants written through (dp/dv)_T; exactly 0 on the spinodal.
double det_energy(const Model& model, const StatePoint& point);
double det_entropy(const Model& model, const StatePoint& point);
double det_energy_tv(const Model& model, double T, double v);

// det_energy - T^4 det_entropy.
double t4_residual(const Model& model, const StatePoint& point);

struct DegeneracyReport {
  double T = 0.0;
  std::vector<double> roots;
  std::vector<std::pair<double, double>> brackets;
  std::vector<double> residuals;  // |det_energy| at each root
};

inline constexpr int kDefaultScanCells = 512;

/// Locates molar volumes on the isotherm T where det_energy vanishes. Sign
/// changes on a uniform grid are refined by bisection; grid-level local minima
/// of |det| are refined by golden-section search so that touching roots (the
/// critical isotherm) are also reported. An empty root list is a valid result.
DegeneracyReport degeneracy_scan(const Model& model, double T, double v_lo, double v_hi,
                                 double tol, int cells = kDefaultScanCells);

}  // namespace thermolength
