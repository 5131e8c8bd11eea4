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

#include "metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "roots.hpp"

namespace thermolength {

namespace {

void require_rep(const StatePoint& point, Rep rep, const char* op) {
  if (point.rep != rep) {
    fail(ErrorCode::InvalidArgument,
         std::string(op) + " needs a " + std::string(to_string(rep)) +
             "-representation point; use convert_state first");
  }
}

MetricTensor2 from_material(const MaterialState& m, double v, Rep rep) {
  MetricTensor2 g{rep};
  if (rep == Rep::Energy) {
    g.g11 = m.T / m.c_v;
    g.g12 = -m.T * m.alpha / (m.kappa_T * m.c_v);
    g.g22 = m.c_p / (v * m.kappa_T * m.c_v);
  } else {
    const double prefactor = 1.0 / (m.c_v * m.T * m.T);
    const double x = (m.T * m.alpha - m.kappa_T * m.p) / m.kappa_T;
    g.g11 = prefactor;
    g.g12 = -x * prefactor;
    g.g22 = (x * x + m.c_v * m.T / (v * m.kappa_T)) * prefactor;
  }
  return g;
}

// alpha/kappa_T = (dp/dT)_v and 1/kappa_T = -v (dp/dv)_T turn the material
// forms into expressions that stay finite when (dp/dv)_T = 0.
MetricTensor2 from_limit(const LocalThermo& lt, Rep rep) {
  MetricTensor2 g{rep};
  if (rep == Rep::Energy) {
    g.g11 = lt.T / lt.c_v;
    g.g12 = -lt.T * lt.dp_dT / lt.c_v;
    g.g22 = -lt.dp_dv + lt.T * lt.dp_dT * lt.dp_dT / lt.c_v;
  } else {
    const double prefactor = 1.0 / (lt.c_v * lt.T * lt.T);
    const double x = lt.T * lt.dp_dT - lt.p;
    g.g11 = prefactor;
    g.g12 = -x * prefactor;
    g.g22 = (x * x - lt.c_v * lt.T * lt.dp_dv) * prefactor;
  }
  return g;
}

MetricTensor2 exact_hessian_metric(const Model& model, const StatePoint& point) {
  MetricTensor2 g{point.rep};
  if (point.rep == Rep::Energy) {
    const auto j = fundamental_energy(model, point.x1, point.x2);
    g.g11 = j.d11;
    g.g12 = j.d12;
    g.g22 = j.d22;
  } else {
    const auto j = fundamental_entropy(model, point.x1, point.x2);
    g.g11 = -j.d11;
    g.g12 = -j.d12;
    g.g22 = -j.d22;
  }
  return g;
}

double closed_det_energy(const LocalThermo& lt) { return -(lt.T / lt.c_v) * lt.dp_dv; }

double closed_det_entropy(const LocalThermo& lt) {
  return -lt.dp_dv / (lt.c_v * lt.T * lt.T * lt.T);
}

}  // namespace

Definiteness MetricTensor2::definiteness() const noexcept {
  const double d = det();
  if (d > 0.0) return g11 > 0.0 ? Definiteness::PositiveDefinite : Definiteness::NegativeDefinite;
  if (d < 0.0) return Definiteness::Indefinite;
  if (g11 > 0.0 || g22 > 0.0) return Definiteness::PositiveSemidefinite;
  if (g11 < 0.0 || g22 < 0.0) return Definiteness::NegativeSemidefinite;
  return Definiteness::PositiveSemidefinite;
}

MetricTensor2 energy_metric(const Model& model, const StatePoint& point) {
  require_rep(point, Rep::Energy, "energy_metric");
  if (!model.has_closed_forms()) return exact_hessian_metric(model, point);
  return from_material(material_at(model, point), point.x2, Rep::Energy);
}

MetricTensor2 entropy_metric(const Model& model, const StatePoint& point) {
  require_rep(point, Rep::Entropy, "entropy_metric");
  if (!model.has_closed_forms()) return exact_hessian_metric(model, point);
  return from_material(material_at(model, point), point.x2, Rep::Entropy);
}

MetricTensor2 metric_at(const Model& model, const StatePoint& point) {
  if (!model.has_closed_forms()) return exact_hessian_metric(model, point);
  const auto lt = local_thermo(model, point);
  if (lt.dp_dv == 0.0) return from_limit(lt, point.rep);
  return from_material(material_at(model, point), point.x2, point.rep);
}

MetricTensor2 metric_from_hessian(const Model& model, const StatePoint& point, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    fail(ErrorCode::InvalidArgument, "finite-difference step must be > 0");
  }
  const double h1 = step * std::max(1.0, std::abs(point.x1));
  const double h2 = step * std::max(1.0, std::abs(point.x2));
  if (point.x2 - 2.0 * h2 <= model.config().b) {
    fail(ErrorCode::NonPhysicalState, "finite-difference stencil leaves the domain v > b");
  }
  auto f = [&](double x1, double x2) {
    if (point.rep == Rep::Energy) return fundamental_energy(model, x1, x2).value;
    return -fundamental_entropy(model, x1, x2).value;
  };
  const double x1 = point.x1;
  const double x2 = point.x2;
  const double f0 = f(x1, x2);
  MetricTensor2 g{point.rep};
  g.g11 = (f(x1 + h1, x2) - 2.0 * f0 + f(x1 - h1, x2)) / (h1 * h1);
  g.g22 = (f(x1, x2 + h2) - 2.0 * f0 + f(x1, x2 - h2)) / (h2 * h2);
  g.g12 = (f(x1 + h1, x2 + h2) - f(x1 + h1, x2 - h2) - f(x1 - h1, x2 + h2) +
           f(x1 - h1, x2 - h2)) /
          (4.0 * h1 * h2);
  return g;
}

double det_energy(const Model& model, const StatePoint& point) {
  if (!model.has_closed_forms()) {
    return exact_hessian_metric(model, convert_state(model, point, Rep::Energy)).det();
  }
  return closed_det_energy(local_thermo(model, point));
}

double det_entropy(const Model& model, const StatePoint& point) {
  if (!model.has_closed_forms()) {
    return exact_hessian_metric(model, convert_state(model, point, Rep::Entropy)).det();
  }
  return closed_det_entropy(local_thermo(model, point));
}

double det_energy_tv(const Model& model, double T, double v) {
  if (!model.has_closed_forms()) {
    return det_energy(model, state_from_tv(model, T, v, Rep::Energy));
  }
  return -(T / model.config().c_v) * isothermal_dp_dv(model, T, v);
}

double t4_residual(const Model& model, const StatePoint& point) {
  const double T = temperature_at(model, point);
  const double T2 = T * T;
  return det_energy(model, point) - T2 * T2 * det_entropy(model, point);
}

DegeneracyReport degeneracy_scan(const Model& model, double T, double v_lo, double v_hi,
                                 double tol, int cells) {
  if (!(v_lo > model.config().b) || !std::isfinite(v_lo)) {
    fail(ErrorCode::InvalidArgument, "degeneracy scan requires v_lo > b");
  }
  if (!(v_hi > v_lo) || !std::isfinite(v_hi)) {
    fail(ErrorCode::InvalidArgument, "degeneracy scan requires v_hi > v_lo");
  }
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "degeneracy scan tolerance must be > 0");
  if (cells < 2) fail(ErrorCode::InvalidArgument, "degeneracy scan needs at least 2 cells");

  auto det = [&](double v) { return det_energy_tv(model, T, v); };
  const double width = (v_hi - v_lo) / cells;
  std::vector<double> grid(static_cast<std::size_t>(cells) + 1);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = i + 1 == grid.size() ? v_hi : v_lo + static_cast<double>(i) * width;
    values[i] = det(grid[i]);
  }

  struct Found {
    double root;
    std::pair<double, double> bracket;
  };
  std::vector<Found> found;

  // Grid points that are exact zeros; a run of them is one root at its centre.
  for (std::size_t i = 0; i < grid.size();) {
    if (values[i] != 0.0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < grid.size() && values[j + 1] == 0.0) ++j;
    found.push_back({0.5 * (grid[i] + grid[j]), {grid[i], grid[j]}});
    i = j + 1;
  }

  // Simple roots.
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (values[i] == 0.0 || values[i + 1] == 0.0) continue;
    if (std::signbit(values[i]) == std::signbit(values[i + 1])) continue;
    const double root = detail::bisect(det, grid[i], grid[i + 1], values[i], tol);
    found.push_back({root, {grid[i], grid[i + 1]}});
  }

  // Touching roots: |det| has a grid-level local minimum without a sign change.
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double l = values[i - 1], m = values[i], r = values[i + 1];
    if (l == 0.0 || m == 0.0 || r == 0.0) continue;
    if (std::signbit(l) != std::signbit(m) || std::signbit(m) != std::signbit(r)) continue;
    if (!(std::abs(m) <= std::abs(l) && std::abs(m) <= std::abs(r))) continue;

    constexpr double kInvPhi = 0.6180339887498949;
    double a = grid[i - 1], b = grid[i + 1];
    double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
    double fc = std::abs(det(c)), fd = std::abs(det(d));
    while (b - a > tol) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = std::abs(det(c));
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = std::abs(det(d));
      }
      if (fc == 0.0 || fd == 0.0) break;
    }
    double best = fc <= fd ? c : d;
    if (det(best) != 0.0) continue;

    // det is snapped to zero on a tiny plateau around a touching root; its
    // centre is the root.
    auto plateau_edge = [&](double nonzero, double zero) {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (nonzero + zero);
        if (mid == nonzero || mid == zero) break;
        (det(mid) == 0.0 ? zero : nonzero) = mid;
      }
      return zero;
    };
    const double left = plateau_edge(grid[i - 1], best);
    const double right = plateau_edge(grid[i + 1], best);
    found.push_back({0.5 * (left + right), {grid[i - 1], grid[i + 1]}});
  }

  std::sort(found.begin(), found.end(),
            [](const Found& x, const Found& y) { return x.root < y.root; });
  DegeneracyReport report;
  report.T = T;
  for (const auto& f : found) {
    if (!report.roots.empty() && f.root - report.roots.back() <= tol) continue;
    report.roots.push_back(f.root);
    report.brackets.push_back(f.bracket);
    report.residuals.push_back(std::abs(det(f.root)));
  }
  return report;
}

}  // namespace thermolength
