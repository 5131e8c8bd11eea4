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

#include "pathlen.hpp"

namespace thermolength {

struct GeodesicOptions {
  int max_iterations = 5000;
  // Stop once an iteration shortens the path by less than this fraction.
  double relative_decrease_tol = 1e-12;
  // Relative central-difference step for the gradient.
  double fd_step = 1e-6;
  QuadratureOptions quadrature{};
};

struct GeodesicResult {
  Polyline path;
  LengthResult length;         // adaptive-quadrature length of `path`
  double initial_length = 0.0;  // same measure for the straight polyline
  int iterations = 0;
  bool converged = false;
};

/// Minimal-length polyline between two states of the same rep.
///
/// Starts from the straight coordinate polyline with n_segments pieces and
/// moves the interior nodes by metric-preconditioned gradient descent
/// (central-difference gradients, Armijo backtracking). Segment lengths inside
/// the optimizer use fixed Gauss-Legendre rules so the objective is smooth in
/// the node positions; the reported lengths come from `length`. The returned
/// path is never longer than the straight initialization. Failure to converge
/// within max_iterations is reported through `converged`, not by throwing.
GeodesicResult geodesic(const Model& model, Rep metric, const StatePoint& from,
                        const StatePoint& to, int n_segments, const GeodesicOptions& opts = {});

}  // namespace thermolength
