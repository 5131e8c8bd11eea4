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

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>

#include "errors.hpp"

namespace thermolength {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 40;
  // Quadratic-form values in [-clamp_eps * scale, 0) are treated as 0.
  double clamp_eps = 1e-12;
};

void validate(const QuadratureOptions& opts);

// Integrand sample plus an absolute bound on its rounding noise. Intervals
// whose Simpson correction is below the accumulated noise are accepted.
struct IntegrandValue {
  double value = 0.0;
  double uncertainty = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

namespace detail {

template <class F>
IntegrandValue sample(F& f, double x) {
  if constexpr (std::is_convertible_v<std::invoke_result_t<F&, double>, double>) {
    return {static_cast<double>(f(x)), 0.0};
  } else {
    return f(x);
  }
}

template <class F>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(F& f, const QuadratureOptions& opts) : f_(f), opts_(opts) {}

  QuadratureResult run(double a, double b) {
    QuadratureResult out;
    if (a == b) return out;
    const double m = 0.5 * (a + b);
    const auto fa = eval(a), fm = eval(m), fb = eval(b);
    const double whole = (b - a) / 6.0 * (fa.value + 4.0 * fm.value + fb.value);
    // Five-point estimate fixes the global target before refinement starts.
    const auto fl = eval(0.5 * (a + m)), fr = eval(0.5 * (m + b));
    const double estimate = (b - a) / 12.0 *
                            (fa.value + 4.0 * fl.value + 2.0 * fm.value + 4.0 * fr.value + fb.value);
    double target = std::min(opts_.abs_tol, opts_.rel_tol * std::abs(estimate));
    if (estimate == 0.0) target = opts_.abs_tol;
    refine(a, b, fa, fm, fb, fl, fr, whole, target, 1);
    out.value = value_;
    out.error_estimate = error_;
    out.evaluations = evaluations_;
    return out;
  }

 private:
  IntegrandValue eval(double x) {
    ++evaluations_;
    return sample(f_, x);
  }

  void refine(double a, double b, IntegrandValue fa, IntegrandValue fm, IntegrandValue fb,
              IntegrandValue fl, IntegrandValue fr, double whole, double tol, int depth) {
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    const double m = 0.5 * (a + b);
    const double h = b - a;
    const double left = h / 12.0 * (fa.value + 4.0 * fl.value + fm.value);
    const double right = h / 12.0 * (fm.value + 4.0 * fr.value + fb.value);
    const double delta = left + right - whole;
    const double noise =
        h * std::max({fa.uncertainty, fl.uncertainty, fm.uncertainty, fr.uncertainty, fb.uncertainty});
    const double rounding = 4.0 * kEps * (std::abs(left) + std::abs(right));
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const bool unsplittable = !(a < lm && lm < m && m < rm && rm < b);
    if (std::abs(delta) <= 15.0 * tol || std::abs(delta) <= std::max(noise, rounding) ||
        unsplittable) {
      value_ += left + right + delta / 15.0;
      error_ += std::max(std::abs(delta) / 15.0, rounding);
      return;
    }
    if (depth >= opts_.max_depth) {
      fail(ErrorCode::DepthExceeded,
           "adaptive quadrature reached the recursion cap before meeting its tolerance");
    }
    const auto fll = eval(0.5 * (a + lm)), flr = eval(0.5 * (lm + m));
    refine(a, m, fa, fl, fm, fll, flr, left, 0.5 * tol, depth + 1);
    const auto frl = eval(0.5 * (m + rm)), frr = eval(0.5 * (rm + b));
    refine(m, b, fm, fr, fb, frl, frr, right, 0.5 * tol, depth + 1);
  }

  F& f_;
  const QuadratureOptions& opts_;
  double value_ = 0.0;
  double error_ = 0.0;
  long evaluations_ = 0;
};

}  // namespace detail

/// Adaptive Simpson quadrature with the interval-halving error estimate and
/// Richardson correction. The target accuracy is min(abs_tol, rel_tol * |I|),
/// with |I| taken from an initial five-point estimate. `f` returns either a
/// double or an IntegrandValue. Throws DepthExceeded if an interval still
/// misses its share of the tolerance at max_depth.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  validate(opts);
  if (!std::isfinite(a) || !std::isfinite(b)) {
    fail(ErrorCode::InvalidArgument, "integration limits must be finite");
  }
  if (b < a) {
    auto r = integrate(f, b, a, opts);
    r.value = -r.value;
    return r;
  }
  detail::AdaptiveSimpson<std::remove_reference_t<F>> engine(f, opts);
  return engine.run(a, b);
}

}  // namespace thermolength
