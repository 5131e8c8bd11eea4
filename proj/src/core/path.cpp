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

#include "path.hpp"

#include <boost/math/interpolators/makima.hpp>
#include <cmath>
#include <memory>
#include <string>

#include "errors.hpp"

namespace thermolength {

namespace {

void check_range(double from, double to, const char* what) {
  if (!std::isfinite(from) || !std::isfinite(to)) {
    fail(ErrorCode::InvalidArgument, std::string(what) + " must be finite");
  }
  if (to < from) {
    fail(ErrorCode::InvalidArgument, std::string(what) + " must be ordered (from <= to)");
  }
}

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) fail(ErrorCode::InvalidArgument, std::string(what) + " must be finite");
}

// Piecewise-linear interpolation for short tables.
class LinearTable {
 public:
  LinearTable(std::vector<double> xi, std::vector<double> y) : xi_(std::move(xi)), y_(std::move(y)) {}

  double operator()(double t) const {
    const auto k = segment(t);
    const double w = (t - xi_[k]) / (xi_[k + 1] - xi_[k]);
    return y_[k] + w * (y_[k + 1] - y_[k]);
  }
  double prime(double t) const {
    const auto k = segment(t);
    return (y_[k + 1] - y_[k]) / (xi_[k + 1] - xi_[k]);
  }

 private:
  std::size_t segment(double t) const {
    std::size_t k = 0;
    while (k + 2 < xi_.size() && t >= xi_[k + 1]) ++k;
    return k;
  }
  std::vector<double> xi_, y_;
};

}  // namespace

Parametric Parametric::from_table(Rep rep, std::vector<double> xi, std::vector<double> x1,
                                  std::vector<double> x2) {
  if (xi.size() < 2 || xi.size() != x1.size() || xi.size() != x2.size()) {
    fail(ErrorCode::InvalidArgument,
         "parametric tables need at least 2 samples and equal lengths");
  }
  for (std::size_t i = 0; i < xi.size(); ++i) {
    check_finite(xi[i], "xi");
    check_finite(x1[i], "x1");
    check_finite(x2[i], "x2");
    if (i > 0 && !(xi[i] > xi[i - 1])) {
      fail(ErrorCode::InvalidArgument, "parametric xi samples must be strictly increasing");
    }
  }
  Parametric out;
  out.rep = rep;
  out.xi_from = xi.front();
  out.xi_to = xi.back();
  out.breakpoints.assign(xi.begin() + 1, xi.end() - 1);
  if (xi.size() >= 4) {
    using Interp = boost::math::interpolators::makima<std::vector<double>>;
    auto ix1 = std::make_shared<Interp>(std::vector<double>(xi), std::move(x1));
    auto ix2 = std::make_shared<Interp>(std::move(xi), std::move(x2));
    out.position = [ix1, ix2](double t) { return Coord2{(*ix1)(t), (*ix2)(t)}; };
    out.velocity = [ix1, ix2](double t) { return Coord2{ix1->prime(t), ix2->prime(t)}; };
  } else {
    auto ix1 = std::make_shared<LinearTable>(xi, std::move(x1));
    auto ix2 = std::make_shared<LinearTable>(std::move(xi), std::move(x2));
    out.position = [ix1, ix2](double t) { return Coord2{(*ix1)(t), (*ix2)(t)}; };
    out.velocity = [ix1, ix2](double t) { return Coord2{ix1->prime(t), ix2->prime(t)}; };
  }
  return out;
}

Rep path_rep(const PathSpec& path) {
  struct Visitor {
    Rep operator()(const ConstS&) const { return Rep::Energy; }
    Rep operator()(const ConstV&) const { return Rep::Energy; }
    Rep operator()(const ConstP&) const { return Rep::Energy; }
    Rep operator()(const ConstU&) const { return Rep::Entropy; }
    Rep operator()(const ConstVEntropy&) const { return Rep::Entropy; }
    Rep operator()(const Isotherm& p) const { return p.rep; }
    Rep operator()(const Polyline& p) const { return p.rep; }
    Rep operator()(const Parametric& p) const { return p.rep; }
  };
  return std::visit(Visitor{}, path);
}

void validate(const PathSpec& path) {
  struct Visitor {
    void operator()(const ConstS& p) const {
      check_finite(p.s, "s");
      check_range(p.v_from, p.v_to, "v_range");
    }
    void operator()(const ConstV& p) const {
      check_finite(p.v, "v");
      check_range(p.s_from, p.s_to, "s_range");
    }
    void operator()(const ConstP& p) const {
      check_finite(p.p, "p");
      check_range(p.v_from, p.v_to, "v_range");
    }
    void operator()(const ConstU& p) const {
      check_finite(p.u, "u");
      check_range(p.v_from, p.v_to, "v_range");
    }
    void operator()(const ConstVEntropy& p) const {
      check_finite(p.v, "v");
      check_range(p.u_from, p.u_to, "u_range");
    }
    void operator()(const Isotherm& p) const {
      check_finite(p.T, "T");
      check_range(p.v_from, p.v_to, "v_range");
    }
    void operator()(const Polyline& p) const {
      if (p.nodes.size() < 2) fail(ErrorCode::InvalidArgument, "polyline needs at least 2 nodes");
      for (const auto& n : p.nodes) {
        check_finite(n[0], "polyline node");
        check_finite(n[1], "polyline node");
      }
    }
    void operator()(const Parametric& p) const {
      check_range(p.xi_from, p.xi_to, "xi_range");
      if (!p.position || !p.velocity) {
        fail(ErrorCode::InvalidArgument, "parametric path needs position and velocity");
      }
    }
  };
  std::visit(Visitor{}, path);
}

}  // namespace thermolength
