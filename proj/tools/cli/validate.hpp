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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emit.hpp"
#include "thermolength/thermolength.h"

namespace tlcli {

// Pass thresholds for the identity suite, in report order.
struct Thresholds {
  std::vector<std::pair<std::string, double>> entries;

  double at(const std::string& name) const;
  static Thresholds defaults();
  // Overrides entries from a JSON object {"name": value, ...}. Unknown names
  // and non-positive values are usage errors.
  void override_from_file(const std::string& path);
};

inline constexpr const char* kThresholdTableVersion = "defaults-v1";
inline constexpr std::uint64_t kValidationSeed = 20260101;

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double threshold = 0.0;
  int samples = 0;
  CheckStatus status = CheckStatus::Skipped;
  std::string note;
};

struct SegmentReport {
  double T = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  tl_theorem_report report{};
};

struct ValidationReport {
  tl_family family = TL_FAMILY_IDEAL;
  std::vector<CheckResult> checks;
  std::optional<SegmentReport> theorem1_worst;
  std::optional<SegmentReport> theorem2_worst;

  bool passed() const;
};

const char* status_name(CheckStatus status);

ValidationReport run_validation(const tl_model* model, const Thresholds& thresholds,
                                std::uint64_t seed = kValidationSeed);

Json to_json(const ValidationReport& report, const std::string& threshold_source);
Table to_table(const ValidationReport& report);

}  // namespace tlcli
