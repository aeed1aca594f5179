// Copyright 2026 The solgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "solgeom/report.hpp"

namespace solgeom {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

const std::vector<std::string_view>& command_names();

struct RunConfig {
  std::string command;
  std::string map;
  std::string manifold;
  std::string frame;
  /// JSON object files loaded on top of the standard catalog, in order.
  std::vector<std::string> configs;
  /// Sample spec; empty selects the command default (random:10:<seed>, or quasi:64 for submersion-check).
  std::string points;
  std::uint64_t seed = 7;
  int restarts = 1000;
  bool control = false;
  std::vector<std::pair<std::string, double>> tolerances;
  /// Overrides for the selected map's parameters.
  std::vector<std::pair<std::string, double>> params;
  std::string output;

  /// Keys mirror the field names. Throws ConfigError on schema violations.
  static RunConfig from_json(std::string_view text);
  json to_json() const;
};

struct RunResult {
  /// Null when the run stopped on a configuration error.
  json report;
  int exit_status = kExitPass;
  std::string diagnostic;
};

RunResult run(const RunConfig& config);

/// Two-space indented JSON with a trailing newline.
std::string render(const json& report);

}  // namespace solgeom
