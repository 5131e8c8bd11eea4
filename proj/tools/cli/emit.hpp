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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace tlcli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

Format parse_format(const std::string& text);

// Shortest decimal that parses back to the same double (at most 17
// significant digits).
std::string format_number(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const Table& table);
// Two-space indented, keys in insertion order, trailing newline.
void write_json(std::ostream& os, const Json& doc);

// Writes to `out_path`, or stdout when it is empty. IO errors name the path.
void emit_text(const std::string& out_path, const std::string& text);

}  // namespace tlcli
