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

#include <optional>
#include <string>

namespace tlcli {

// Flags shared by the subcommands; each subcommand reads the ones it needs.
struct Options {
  std::string config;
  std::optional<std::string> rep;
  std::string state;
  std::string from;
  std::string to;
  std::string path;
  std::string grid;
  std::string out;
  std::optional<std::string> format;
  std::optional<double> tol;
  std::string threshold_file;
  int segments = 16;
};

int run_metric(const Options& o);
int run_length(const Options& o);
int run_sweep(const Options& o);
int run_degeneracy(const Options& o);
int run_geodesic(const Options& o);
int run_validate(const Options& o);

// Full command line entry point: parses argv, dispatches, maps errors to exit
// codes and prints diagnostics on stderr.
int run(int argc, char** argv);

}  // namespace tlcli
