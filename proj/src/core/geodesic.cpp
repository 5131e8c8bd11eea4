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

#include "geodesic.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace thermolength {

namespace {

class PolylineObjective {
 public:
  PolylineObjective(const Model& model, Rep rep, double clamp_eps)
      : model_(model), rep_(rep), clamp_eps_(clamp_eps) {}

  double segment(const Coord2& a, const Coord2& b) const {
    const double d1 = b[0] - a[0], d2 = b[1] - a[1];
    if (d1 == 0.0 && d2 == 0.0) return 0.0;
    bool clamped = false;
    auto f = [&](double t) {
      const auto g = metric_at(model_, StatePoint{rep_, a[0] + t * d1, a[1] + t * d2});
      const double q = g.quadratic_form(d1, d2);
      const double scale =
          std::abs(g.g11) * d1 * d1 + 2.0 * std::abs(g.g12 * d1 * d2) + std::abs(g.g22) * d2 * d2;
      return guarded_sqrt(q, scale, clamp_eps_, clamped).value;
    };
    return boost::math::quadrature::gauss<double, 10>::integrate(f, 0.0, 1.0);
  }

  double total(const std::vector<Coord2>& nodes) const {
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) sum += segment(nodes[k], nodes[k + 1]);
    return sum;
  }

  // Length of the two segments touching interior node k if it sat at x.
  double local(const std::vector<Coord2>& nodes, std::size_t k, const Coord2& x) const {
    return segment(nodes[k - 1], x) + segment(x, nodes[k + 1]);
  }

  std::optional<MetricTensor2> metric(const Coord2& x) const {
    try {
      return metric_at(model_, StatePoint{rep_, x[0], x[1]});
    } catch (const Error&) {
      return std::nullopt;
    }
  }

 private:
  const Model& model_;
  Rep rep_;
  double clamp_eps_;
};

std::optional<double> try_total(const PolylineObjective& obj, const std::vector<Coord2>& nodes) {
  try {
    const double value = obj.total(nodes);
    if (std::isfinite(value)) return value;
  } catch (const Error&) {
  }
  return std::nullopt;
}

double partial(const PolylineObjective& obj, const std::vector<Coord2>& nodes, std::size_t k,
               int j, double rel_step) {
  const double h = rel_step * std::max(1.0, std::abs(nodes[k][j]));
  Coord2 plus = nodes[k], minus = nodes[k];
  plus[j] += h;
  minus[j] -= h;
  const double centre = obj.local(nodes, k, nodes[k]);
  auto eval = [&](const Coord2& x) -> std::optional<double> {
    try {
      return obj.local(nodes, k, x);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const auto fp = eval(plus), fm = eval(minus);
  if (fp && fm) return (*fp - *fm) / (2.0 * h);
  if (fp) return (*fp - centre) / h;
  if (fm) return (centre - *fm) / h;
  return 0.0;
}

// 2x2 helpers for the block-tridiagonal solves.
struct Mat2 {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;  // [[a, b], [c, d]]
};

Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
Mat2 operator*(double s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}
Coord2 operator*(const Mat2& x, const Coord2& v) {
  return {x.a * v[0] + x.b * v[1], x.c * v[0] + x.d * v[1]};
}
Mat2 transpose(const Mat2& x) { return {x.a, x.c, x.b, x.d}; }

// Solves the symmetric block-tridiagonal system over interior nodes 1..n-1
// with diagonal blocks diag[k] and couplings upper[k] between k and k+1.
// Returns false on a singular pivot.
bool solve_block_tridiagonal(const std::vector<Mat2>& diag, const std::vector<Mat2>& upper,
                             const std::vector<Coord2>& rhs, std::vector<Coord2>& x) {
  const std::size_t n = diag.size() - 1;
  std::vector<Mat2> c_prime(n + 1);
  std::vector<Coord2> d_prime(n + 1);
  for (std::size_t k = 1; k < n; ++k) {
    Mat2 piv = diag[k];
    Coord2 r = rhs[k];
    if (k > 1) {
      const Mat2 lower = transpose(upper[k - 1]);
      piv = piv - lower * c_prime[k - 1];
      const Coord2 t = lower * d_prime[k - 1];
      r = {r[0] - t[0], r[1] - t[1]};
    }
    const double det = piv.a * piv.d - piv.b * piv.c;
    const double scale = std::abs(piv.a * piv.d) + std::abs(piv.b * piv.c);
    if (!(std::abs(det) > 1e-300) || !(std::abs(det) > 1e-14 * scale)) return false;
    const Mat2 inv{piv.d / det, -piv.b / det, -piv.c / det, piv.a / det};
    if (k + 1 < n) c_prime[k] = inv * upper[k];
    d_prime[k] = inv * r;
  }
  for (std::size_t k = n - 1; k >= 1; --k) {
    x[k] = d_prime[k];
    if (k + 1 < n) {
      const Coord2 t = c_prime[k] * x[k + 1];
      x[k] = {x[k][0] - t[0], x[k][1] - t[1]};
    }
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (!std::isfinite(x[k][0]) || !std::isfinite(x[k][1])) return false;
  }
  return true;
}

// Block-tridiagonal matrix sum_k M_k / l_k from the metric at each segment
// midpoint: the Hessian of the discrete length with the tangential
// projection dropped. Where the metric is not positive definite the block
// falls back to a multiple of the identity.
void metric_blocks(const PolylineObjective& obj, const std::vector<Coord2>& nodes,
                   std::vector<Mat2>& diag, std::vector<Mat2>& upper) {
  const std::size_t n = nodes.size() - 1;
  std::vector<Mat2> seg(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Coord2 mid = {0.5 * (nodes[k][0] + nodes[k + 1][0]),
                        0.5 * (nodes[k][1] + nodes[k + 1][1])};
    const double d1 = nodes[k + 1][0] - nodes[k][0], d2 = nodes[k + 1][1] - nodes[k][1];
    Mat2 m{1.0, 0.0, 0.0, 1.0};
    if (const auto g = obj.metric(mid); g && g->g11 > 0.0 && g->det() > 0.0) {
      m = {g->g11, g->g12, g->g12, g->g22};
    } else if (g) {
      const double s = 0.5 * (std::abs(g->g11) + std::abs(g->g22));
      if (s > 0.0) m = {s, 0.0, 0.0, s};
    }
    double len = std::sqrt(std::max(0.0, m.a * d1 * d1 + 2.0 * m.b * d1 * d2 + m.d * d2 * d2));
    if (!(len > 0.0)) len = std::numeric_limits<double>::min();
    seg[k] = (1.0 / len) * m;
  }
  diag.assign(n + 1, Mat2{});
  upper.assign(n + 1, Mat2{});
  for (std::size_t k = 1; k < n; ++k) {
    diag[k] = seg[k - 1] + seg[k];
    upper[k] = -1.0 * seg[k];
  }
}

}  // namespace

GeodesicResult geodesic(const Model& model, Rep metric, const StatePoint& from,
                        const StatePoint& to, int n_segments, const GeodesicOptions& opts) {
  if (from.rep != metric || to.rep != metric) {
    fail(ErrorCode::InvalidArgument, "geodesic endpoints must be in the requested rep");
  }
  if (n_segments < 2) fail(ErrorCode::InvalidArgument, "geodesic needs n_segments >= 2");
  if (opts.max_iterations < 0 || !(opts.fd_step > 0.0) || !(opts.relative_decrease_tol >= 0.0)) {
    fail(ErrorCode::InvalidArgument, "invalid geodesic options");
  }
  validate(opts.quadrature);
  temperature_at(model, from);
  temperature_at(model, to);

  GeodesicResult result;
  result.path.rep = metric;
  auto& nodes = result.path.nodes;
  const auto n = static_cast<std::size_t>(n_segments);
  for (std::size_t k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n);
    nodes.push_back({from.x1 + t * (to.x1 - from.x1), from.x2 + t * (to.x2 - from.x2)});
  }
  nodes.back() = {to.x1, to.x2};

  if (from.x1 == to.x1 && from.x2 == to.x2) {
    result.converged = true;
    return result;
  }

  const Polyline straight = result.path;
  const LengthResult straight_length = length(model, metric, straight, opts.quadrature);
  result.initial_length = straight_length.length;

  const PolylineObjective obj(model, metric, opts.quadrature.clamp_eps);
  double current = obj.total(nodes);

  // L-BFGS over the interior nodes, with the metric block matrix as the
  // initial inverse-Hessian scaling. The metric blocks get the curvature
  // across the path right; the history picks up the much weaker curvature
  // along it.
  constexpr std::size_t kHistory = 12;
  const std::size_t dim = 2 * (n - 1);
  struct Pair {
    std::vector<double> s, y;
    double rho;
  };
  std::deque<Pair> history;
  std::vector<Coord2> grad(n + 1), dir(n + 1), rhs(n + 1), trial;
  std::vector<Mat2> m_diag, m_upper;

  auto flat = [&](const std::vector<Coord2>& v) {
    std::vector<double> out(dim);
    for (std::size_t k = 1; k < n; ++k) {
      out[2 * (k - 1)] = v[k][0];
      out[2 * (k - 1) + 1] = v[k][1];
    }
    return out;
  };
  auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
    return sum;
  };
  auto gradient = [&](const std::vector<Coord2>& at, std::vector<Coord2>& g) {
    for (std::size_t k = 1; k < n; ++k) {
      g[k] = {partial(obj, at, k, 0, opts.fd_step), partial(obj, at, k, 1, opts.fd_step)};
    }
  };
  // dir = -H g, with H0 = A^{-1}.
  auto direction = [&](const std::vector<Coord2>& g, bool use_history) {
    std::vector<double> q = flat(g);
    std::vector<double> alpha(history.size());
    if (use_history) {
      for (std::size_t i = history.size(); i-- > 0;) {
        alpha[i] = history[i].rho * dot(history[i].s, q);
        for (std::size_t j = 0; j < dim; ++j) q[j] -= alpha[i] * history[i].y[j];
      }
    }
    metric_blocks(obj, nodes, m_diag, m_upper);
    for (std::size_t k = 1; k < n; ++k) rhs[k] = {q[2 * (k - 1)], q[2 * (k - 1) + 1]};
    if (!solve_block_tridiagonal(m_diag, m_upper, rhs, dir)) {
      for (std::size_t k = 1; k < n; ++k) dir[k] = rhs[k];
    }
    std::vector<double> r = flat(dir);
    if (use_history) {
      for (std::size_t i = 0; i < history.size(); ++i) {
        const double beta = history[i].rho * dot(history[i].y, r);
        for (std::size_t j = 0; j < dim; ++j) r[j] += history[i].s[j] * (alpha[i] - beta);
      }
    }
    for (std::size_t k = 1; k < n; ++k) dir[k] = {-r[2 * (k - 1)], -r[2 * (k - 1) + 1]};
  };

  gradient(nodes, grad);
  std::vector<Coord2> next_grad(n + 1);
  for (int it = 0; it < opts.max_iterations; ++it) {
    result.iterations = it + 1;
    bool accepted = false;
    double next = current;
    for (int pass = 0; pass < 2 && !accepted; ++pass) {
      const bool use_history = pass == 0 && !history.empty();
      if (pass == 1 && history.empty() && it > 0) break;
      direction(grad, use_history);
      double slope = 0.0;
      for (std::size_t k = 1; k < n; ++k) slope += grad[k][0] * dir[k][0] + grad[k][1] * dir[k][1];
      if (!(slope < 0.0)) {
        history.clear();
        continue;
      }
      for (double step = 1.0; step > 1e-10; step *= 0.5) {
        trial = nodes;
        for (std::size_t k = 1; k < n; ++k) {
          trial[k][0] += step * dir[k][0];
          trial[k][1] += step * dir[k][1];
        }
        const auto value = try_total(obj, trial);
        if (value && *value <= current + 1e-4 * step * slope) {
          next = *value;
          accepted = true;
          break;
        }
      }
      if (!accepted) history.clear();
    }
    if (!accepted) {
      result.converged = true;
      break;
    }
    gradient(trial, next_grad);
    Pair pr{flat(trial), flat(next_grad), 0.0};
    const auto x_old = flat(nodes), g_old = flat(grad);
    for (std::size_t j = 0; j < dim; ++j) {
      pr.s[j] -= x_old[j];
      pr.y[j] -= g_old[j];
    }
    const double sy = dot(pr.s, pr.y);
    // Curvature pairs drowned in finite-difference noise are skipped.
    if (sy > 1e-10 * std::sqrt(dot(pr.s, pr.s) * dot(pr.y, pr.y))) {
      pr.rho = 1.0 / sy;
      history.push_back(std::move(pr));
      if (history.size() > kHistory) history.pop_front();
    }
    nodes.swap(trial);
    grad.swap(next_grad);
    const double decrease = current - next;
    current = next;
    if (decrease < opts.relative_decrease_tol * current) {
      result.converged = true;
      break;
    }
  }

  result.length = length(model, metric, result.path, opts.quadrature);
  if (result.length.length > straight_length.length) {
    result.path = straight;
    result.length = straight_length;
  }
  return result;
}

}  // namespace thermolength
