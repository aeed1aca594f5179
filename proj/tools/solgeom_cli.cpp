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

// Command-line front end. Talks to the engine only through the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "solgeom.h"

namespace {

constexpr int kConfigError = 2;

using json = nlohmann::ordered_json;

// "key=value" with a numeric value.
bool split_assignment(const std::string& s, std::string& key, double& value) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) return false;
  key = s.substr(0, eq);
  const std::string rhs = s.substr(eq + 1);
  char* end = nullptr;
  value = std::strtod(rhs.c_str(), &end);
  return !rhs.empty() && end && *end == '\0';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solgeom: geometry checks for Riemannian submersions from Sol"};
  app.set_version_flag("--version", std::string(sg_version()));

  std::string command;
  std::string map, manifold, frame, points, out;
  std::vector<std::string> configs, tols, params;
  std::uint64_t seed = 7;
  int restarts = 1000;
  bool control = false;

  app.add_option("command", command, "paper-verify | curvature | tension | bitension | integrability | "
                                     "submersion-check | probe-rch")
      ->required()
      ->check(CLI::IsMember({"paper-verify", "curvature", "tension", "bitension", "integrability",
                             "submersion-check", "probe-rch"}));
  app.add_option("--seed", seed, "Seed for random samples and probe restarts");
  app.add_option("--map", map, "Map name");
  app.add_option("--manifold", manifold, "Manifold name");
  app.add_option("--frame", frame, "Frame name");
  app.add_option("--points", points, "random:N:SEED | quasi:N | grid:N | \"x,y,z;x,y,z\"");
  app.add_option("--restarts", restarts, "Probe restarts");
  app.add_flag("--control", control, "Probe the feasible control system instead");
  app.add_option("--config", configs, "JSON description of extra manifolds, maps and frames")->check(CLI::ExistingFile);
  app.add_option("--tol", tols, "Tolerance override, key=value");
  app.add_option("--param", params, "Map parameter override, key=value");
  app.add_option("--out", out, "Write the report here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  json cfg = {{"command", command}, {"seed", seed}, {"restarts", restarts}, {"control", control}};
  if (!map.empty()) cfg["map"] = map;
  if (!manifold.empty()) cfg["manifold"] = manifold;
  if (!frame.empty()) cfg["frame"] = frame;
  if (!points.empty()) cfg["points"] = points;
  if (!configs.empty()) cfg["configs"] = configs;
  if (!out.empty()) cfg["output"] = out;
  for (auto [flag, list] : {std::pair{"tolerances", &tols}, std::pair{"params", &params}}) {
    json obj = json::object();
    for (const auto& s : *list) {
      std::string key;
      double value = 0.0;
      if (!split_assignment(s, key, value)) {
        std::cerr << "error: expected key=value, got '" << s << "'\n";
        return kConfigError;
      }
      obj[key] = value;
    }
    if (!obj.empty()) cfg[flag] = std::move(obj);
  }

  char* report = nullptr;
  int status = kConfigError;
  if (sg_run(cfg.dump().c_str(), &report, &status) != SG_OK) {
    std::cerr << "error: " << sg_last_error() << "\n";
    return kConfigError;
  }
  if (!report) {
    std::cerr << "error: " << sg_last_error() << "\n";
    return status;
  }
  if (out.empty()) {
    std::cout << report;
  } else {
    std::ofstream f(out, std::ios::binary);
    f << report;
    if (!f) {
      std::cerr << "error: cannot write '" << out << "'\n";
      sg_string_free(report);
      return kConfigError;
    }
  }
  sg_string_free(report);
  if (status != 0) std::cerr << sg_last_error() << "\n";
  return status;
}
