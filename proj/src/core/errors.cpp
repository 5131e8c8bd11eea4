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

#include "errors.hpp"

namespace thermolength {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::Config:
      return "ConfigError";
    case ErrorCode::NonPhysicalState:
      return "NonPhysicalState";
    case ErrorCode::DegenerateState:
      return "DegenerateState";
    case ErrorCode::NegativeQuadraticForm:
      return "NegativeQuadraticForm";
    case ErrorCode::DepthExceeded:
      return "DepthExceeded";
    case ErrorCode::UnsupportedModel:
      return "UnsupportedModel";
    case ErrorCode::Io:
      return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace thermolength
