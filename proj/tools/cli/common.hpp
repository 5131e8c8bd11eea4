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

#include <memory>
#include <stdexcept>
#include <string>

#include "thermolength/thermolength.h"

namespace tlcli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

// Status from the C API that is not TL_OK, carried with its message.
class StatusError : public CliError {
 public:
  StatusError(tl_status status, const std::string& message);
  tl_status status() const noexcept { return status_; }

 private:
  tl_status status_;
};

int exit_code_for(tl_status status);

// Throws StatusError for anything but TL_OK. `context` prefixes the message.
void check(tl_status status, const std::string& context = {});

// True for the statuses that mean "this state is not usable" rather than a
// bad request.
bool is_state_error(tl_status status);

struct ModelDeleter {
  void operator()(tl_model* m) const noexcept { tl_model_free(m); }
};
struct PathDeleter {
  void operator()(tl_path* p) const noexcept { tl_path_free(p); }
};
struct DegeneracyDeleter {
  void operator()(tl_degeneracy* d) const noexcept { tl_degeneracy_free(d); }
};
struct GeodesicDeleter {
  void operator()(tl_geodesic* g) const noexcept { tl_geodesic_free(g); }
};

using ModelPtr = std::unique_ptr<tl_model, ModelDeleter>;
using PathPtr = std::unique_ptr<tl_path, PathDeleter>;
using DegeneracyPtr = std::unique_ptr<tl_degeneracy, DegeneracyDeleter>;
using GeodesicPtr = std::unique_ptr<tl_geodesic, GeodesicDeleter>;

// Loads a model config. Parse errors come back as "path:line:col: message".
ModelPtr load_model(const std::string& path);
PathPtr load_path(const std::string& path);

const char* rep_name(tl_rep rep);
tl_rep parse_rep(const std::string& text);
const char* family_name(tl_family family);

}  // namespace tlcli
