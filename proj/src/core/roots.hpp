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

#include <cmath>
#include <optional>
#include <utility>

namespace thermolength::detail {

// Bisection on a sign-change bracket until the interval collapses to adjacent
// doubles or its width drops below x_tol.
template <class F>
double bisect(F&& f, double lo, double hi, double f_lo, double x_tol = 0.0) {
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || (hi - lo) <= x_tol) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Finds a root of f by probing center +/- 2^k * unit for a sign change with
// f(center), then bisecting. Probes where f throws are skipped.
template <class F>
std::optional<double> find_root_outward(F&& f, double center, double unit) {
  auto safe = [&](double x) -> std::optional<double> {
    try {
      const double y = f(x);
      if (std::isfinite(y)) return y;
    } catch (...) {
    }
    return std::nullopt;
  };
  const auto f_center = safe(center);
  if (!f_center) return std::nullopt;
  if (*f_center == 0.0) return center;
  double prev_right = center, prev_left = center;
  double f_prev_right = *f_center, f_prev_left = *f_center;
  double step = unit;
  for (int k = 0; k < 200; ++k, step *= 2.0) {
    const double right = center + step;
    if (const auto fr = safe(right)) {
      if (*fr == 0.0) return right;
      if (std::signbit(*fr) != std::signbit(f_prev_right)) {
        return bisect(f, prev_right, right, f_prev_right);
      }
      prev_right = right;
      f_prev_right = *fr;
    }
    const double left = center - step;
    if (const auto fl = safe(left)) {
      if (*fl == 0.0) return left;
      if (std::signbit(*fl) != std::signbit(f_prev_left)) {
        return bisect(f, left, prev_left, *fl);
      }
      prev_left = left;
      f_prev_left = *fl;
    }
  }
  return std::nullopt;
}

}  // namespace thermolength::detail
