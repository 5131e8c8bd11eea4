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

#include "pathlen.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace thermolength {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

LengthResult from_quadrature(const QuadratureResult& q, bool clamped) {
  LengthResult r;
  r.length = q.value;
  r.error_estimate = q.error_estimate;
  r.evaluations = q.evaluations;
  r.touched_degeneracy = clamped;
  return r;
}

void accumulate(LengthResult& total, const LengthResult& part) {
  total.length += part.length;
  total.error_estimate += part.error_estimate;
  total.evaluations += part.evaluations;
  total.touched_degeneracy = total.touched_degeneracy || part.touched_degeneracy;
}

void require_closed_forms(const Model& model, const char* what) {
  if (!model.has_closed_forms()) {
    fail(ErrorCode::UnsupportedModel,
         std::string(what) + " paths need an explicit p(T, v); not available for linear families");
  }
}

// Integrates a single metric component along one coordinate axis.
template <class PointAt>
LengthResult axis_length(const Model& model, PointAt point_at, bool primary, double from,
                         double to, const QuadratureOptions& opts) {
  if (from == to) return {};
  bool clamped = false;
  auto integrand = [&](double x) {
    const auto g = metric_at(model, point_at(x));
    const double q = primary ? g.g11 : g.g22;
    return guarded_sqrt(q, std::abs(q), opts.clamp_eps, clamped);
  };
  const auto q = integrate(integrand, from, to, opts);
  return from_quadrature(q, clamped);
}

// General curve through the full quadratic form.
template <class Curve>
LengthResult curve_length(const Model& model, Rep rep, Curve curve, double from, double to,
                          const QuadratureOptions& opts) {
  if (from == to) return {};
  bool clamped = false;
  auto integrand = [&](double t) {
    Coord2 x, dx;
    curve(t, x, dx);
    const auto g = metric_at(model, StatePoint{rep, x[0], x[1]});
    const double q = g.quadratic_form(dx[0], dx[1]);
    const double scale = std::abs(g.g11) * dx[0] * dx[0] +
                         2.0 * std::abs(g.g12 * dx[0] * dx[1]) + std::abs(g.g22) * dx[1] * dx[1];
    return guarded_sqrt(q, scale, opts.clamp_eps, clamped);
  };
  const auto q = integrate(integrand, from, to, opts);
  return from_quadrature(q, clamped);
}

LengthResult const_p_length(const Model& model, const ConstP& path,
                            const QuadratureOptions& opts) {
  require_closed_forms(model, "constant-pressure");
  if (path.v_from == path.v_to) return {};
  const auto& c = model.config();
  bool clamped = false;
  auto integrand = [&](double v) {
    // T on the isobar from the closed-form equation of state.
    const double T = (path.p + c.a / (v * v)) * (v - c.b) / c.R;
    const auto point = state_from_tv(model, T, v, Rep::Energy);
    const auto lt = local_thermo(model, point);
    double q;
    if (lt.dp_dv == 0.0) {
      q = 0.0;
    } else {
      const auto m = material_at(model, point);
      q = m.c_p / (m.T * v * v * m.alpha * m.alpha);
    }
    return guarded_sqrt(q, std::abs(q), opts.clamp_eps, clamped);
  };
  return from_quadrature(integrate(integrand, path.v_from, path.v_to, opts), clamped);
}

LengthResult isotherm_length(const Model& model, const Isotherm& path,
                             const QuadratureOptions& opts) {
  require_closed_forms(model, "isotherm");
  auto curve = [&](double v, Coord2& x, Coord2& dx) {
    const auto point = state_from_tv(model, path.T, v, path.rep);
    const auto lt = local_thermo(model, point);
    x = {point.x1, v};
    // (ds/dv)_T = (dp/dT)_v and (du/dv)_T = T (dp/dT)_v - p.
    dx = {path.rep == Rep::Energy ? lt.dp_dT : lt.T * lt.dp_dT - lt.p, 1.0};
  };
  return curve_length(model, path.rep, curve, path.v_from, path.v_to, opts);
}

LengthResult polyline_length(const Model& model, const Polyline& path,
                             const QuadratureOptions& opts) {
  LengthResult total;
  for (std::size_t k = 0; k + 1 < path.nodes.size(); ++k) {
    const Coord2 a = path.nodes[k];
    const Coord2 d = {path.nodes[k + 1][0] - a[0], path.nodes[k + 1][1] - a[1]};
    if (d[0] == 0.0 && d[1] == 0.0) continue;
    auto curve = [&](double t, Coord2& x, Coord2& dx) {
      x = {a[0] + t * d[0], a[1] + t * d[1]};
      dx = d;
    };
    accumulate(total, curve_length(model, path.rep, curve, 0.0, 1.0, opts));
  }
  return total;
}

LengthResult parametric_length(const Model& model, const Parametric& path,
                               const QuadratureOptions& opts) {
  auto curve = [&](double t, Coord2& x, Coord2& dx) {
    x = path.position(t);
    dx = path.velocity(t);
  };
  LengthResult total;
  double lo = path.xi_from;
  auto piece = [&](double hi) {
    if (hi > lo) accumulate(total, curve_length(model, path.rep, curve, lo, hi, opts));
    lo = std::max(lo, hi);
  };
  for (double b : path.breakpoints) {
    if (b > path.xi_from && b < path.xi_to) piece(b);
  }
  piece(path.xi_to);
  return total;
}

}  // namespace

IntegrandValue guarded_sqrt(double q, double scale, double clamp_eps, bool& clamped) {
  if (!std::isfinite(q)) {
    fail(ErrorCode::NonPhysicalState, "non-finite metric quadratic form on path");
  }
  // Rounding bound on q: the form is a short sum of products of metric
  // entries that themselves carry cancellations of similar size.
  const double dq = 32.0 * kEps * scale;
  if (q < 0.0) {
    if (q >= -clamp_eps * scale) {
      clamped = true;
      return {0.0, std::sqrt(dq)};
    }
    std::ostringstream os;
    os.precision(17);
    os << "metric quadratic form is negative (" << q << ", scale " << scale
       << "): the path crosses a locally unstable state";
    fail(ErrorCode::NegativeQuadraticForm, os.str());
  }
  const double root = std::sqrt(q);
  const double sigma = q > dq ? dq / (2.0 * root) : std::sqrt(dq);
  return {root, sigma};
}

LengthResult length(const Model& model, Rep metric, const PathSpec& path,
                    const QuadratureOptions& opts) {
  validate(opts);
  validate(path);
  if (path_rep(path) != metric) {
    fail(ErrorCode::InvalidArgument, "path lives in the " + std::string(to_string(path_rep(path))) +
                                         " representation but the " +
                                         std::string(to_string(metric)) + " metric was requested");
  }
  struct Visitor {
    const Model& model;
    const QuadratureOptions& opts;

    LengthResult operator()(const ConstS& p) const {
      return axis_length(
          model, [&](double v) { return StatePoint::energy(p.s, v); }, false, p.v_from, p.v_to,
          opts);
    }
    LengthResult operator()(const ConstV& p) const {
      return axis_length(
          model, [&](double s) { return StatePoint::energy(s, p.v); }, true, p.s_from, p.s_to,
          opts);
    }
    LengthResult operator()(const ConstP& p) const { return const_p_length(model, p, opts); }
    LengthResult operator()(const ConstU& p) const {
      return axis_length(
          model, [&](double v) { return StatePoint::entropy(p.u, v); }, false, p.v_from, p.v_to,
          opts);
    }
    LengthResult operator()(const ConstVEntropy& p) const {
      return axis_length(
          model, [&](double u) { return StatePoint::entropy(u, p.v); }, true, p.u_from, p.u_to,
          opts);
    }
    LengthResult operator()(const Isotherm& p) const { return isotherm_length(model, p, opts); }
    LengthResult operator()(const Polyline& p) const { return polyline_length(model, p, opts); }
    LengthResult operator()(const Parametric& p) const {
      return parametric_length(model, p, opts);
    }
  };
  return std::visit(Visitor{model, opts}, path);
}

double length_density(const Model& model, Rep metric, const StatePoint& point, Axis axis,
                      const QuadratureOptions& opts) {
  if (point.rep != metric) {
    fail(ErrorCode::InvalidArgument, "length_density: point and metric rep differ");
  }
  const auto g = metric_at(model, point);
  const double q = axis == Axis::Primary ? g.g11 : g.g22;
  bool clamped = false;
  return guarded_sqrt(q, std::abs(q), opts.clamp_eps, clamped).value;
}

}  // namespace thermolength
