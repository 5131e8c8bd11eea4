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

#include "common.hpp"

#include <regex>

namespace tlcli {

StatusError::StatusError(tl_status status, const std::string& message)
    : CliError(exit_code_for(status), message), status_(status) {}

int exit_code_for(tl_status status) {
  switch (status) {
    case TL_OK:
      return kExitOk;
    case TL_ERR_INVALID_ARGUMENT:
    case TL_ERR_CONFIG:
    case TL_ERR_IO:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

void check(tl_status status, const std::string& context) {
  if (status == TL_OK) return;
  std::string msg = tl_status_name(status);
  msg += ": ";
  if (!context.empty()) msg += context + ": ";
  msg += tl_last_error_message();
  throw StatusError(status, msg);
}

bool is_state_error(tl_status status) {
  return status == TL_ERR_NONPHYSICAL_STATE || status == TL_ERR_DEGENERATE_STATE ||
         status == TL_ERR_NEGATIVE_QUADRATIC_FORM;
}

namespace {

// The library reports JSON syntax errors as "line L, column C: ...". Re-anchor
// them on the file so editors can jump to the spot.
std::string anchor(const std::string& path, const std::string& message) {
  static const std::regex located(R"(^line (\d+), column (\d+): ([\s\S]*)$)");
  std::smatch m;
  if (std::regex_match(message, m, located)) {
    return path + ":" + m[1].str() + ":" + m[2].str() + ": " + m[3].str();
  }
  return path + ": " + message;
}

template <class Handle, class Loader>
Handle load(const std::string& path, Loader loader) {
  typename Handle::pointer raw = nullptr;
  const tl_status st = loader(path.c_str(), &raw);
  if (st != TL_OK) throw StatusError(st, anchor(path, tl_last_error_message()));
  return Handle(raw);
}

}  // namespace

ModelPtr load_model(const std::string& path) { return load<ModelPtr>(path, tl_model_from_file); }

PathPtr load_path(const std::string& path) { return load<PathPtr>(path, tl_path_from_file); }

const char* rep_name(tl_rep rep) { return rep == TL_REP_ENERGY ? "energy" : "entropy"; }

tl_rep parse_rep(const std::string& text) {
  if (text == "energy") return TL_REP_ENERGY;
  if (text == "entropy") return TL_REP_ENTROPY;
  throw CliError(kExitUsage, "unknown representation \"" + text + "\" (expected energy|entropy)");
}

const char* family_name(tl_family family) {
  switch (family) {
    case TL_FAMILY_IDEAL:
      return "ideal";
    case TL_FAMILY_QUASI_IDEAL:
      return "quasi_ideal";
    case TL_FAMILY_VAN_DER_WAALS:
      return "van_der_waals";
    case TL_FAMILY_LINEAR_SV:
      return "linear_sv";
    case TL_FAMILY_LINEAR_UV:
      return "linear_uv";
  }
  return "unknown";
}

}  // namespace tlcli
