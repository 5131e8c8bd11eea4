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

#include "quadrature.hpp"

namespace thermolength {

void validate(const QuadratureOptions& opts) {
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0)) {
    fail(ErrorCode::InvalidArgument, "quadrature tolerances must be > 0");
  }
  if (opts.max_depth < 1) fail(ErrorCode::InvalidArgument, "quadrature max_depth must be >= 1");
  if (!(opts.clamp_eps >= 0.0)) fail(ErrorCode::InvalidArgument, "clamp_eps must be >= 0");
}

}  // namespace thermolength
