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

#include <string>
#include <string_view>

#include "eos.hpp"
#include "path.hpp"

namespace thermolength {

/// Parses a model document:
///   {"family": "ideal"|"quasi_ideal"|"van_der_waals"|"linear_sv"|"linear_uv",
///    "R", "c_v", "a", "b", "molar_mass", "c_p",
///    "reference": {"s_ref", "v_ref", "T_ref"},
///    "linear_coeffs": {"a_poly": [...], "b_poly": [...]}}
/// Only "family" is required. Unknown keys are rejected. Syntax errors are
/// reported as "line L, column C: ..." so callers can prefix a file name.
/// Throws Error(Config).
Model model_from_json(std::string_view text);

/// Parses a path document such as {"variant":"const_s","s":0,"v_range":[1,2]}.
/// Variants: const_s, const_v, const_p, const_u, const_v_entropy, isotherm,
/// polyline, parametric. Throws Error(Config).
PathSpec path_from_json(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace thermolength
