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

#include "emit.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>

#include "common.hpp"

namespace tlcli {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw CliError(kExitUsage, "unknown format \"" + text + "\" (expected json|csv)");
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_row(std::ostream& os, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    os << csv_cell(row[i]);
  }
  os << '\n';
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  write_row(os, table.header);
  for (const auto& row : table.rows) write_row(os, row);
}

namespace {

void clear_negative_zero(Json& j) {
  if (j.is_number_float()) {
    if (j.get<double>() == 0.0) j = 0.0;
  } else if (j.is_structured()) {
    for (auto& child : j) clear_negative_zero(child);
  }
}

}  // namespace

void write_json(std::ostream& os, const Json& doc) {
  Json copy = doc;
  clear_negative_zero(copy);
  os << copy.dump(2) << '\n';
}

void emit_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw CliError(kExitUsage, "<stdout>: write failed");
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(kExitUsage, out_path + ": cannot open for writing");
  out << text;
  out.close();
  if (!out) throw CliError(kExitUsage, out_path + ": write failed");
}

}  // namespace tlcli
