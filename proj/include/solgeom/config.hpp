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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "solgeom/catalog.hpp"

namespace solgeom {

/// Objects declared in a JSON description:
///
///   {"manifolds": [{"name", "coords": [...], "metric_upper": [["expr", ...], ...], "samples": [[...]]}],
///    "maps":      [{"name", "source", "target", "components": ["expr", ...], "params": {...}}],
///    "frames":    [{"name", "manifold", "vectors": [["expr" x dim] x 3], "vertical": 1..3}]}
///
/// "samples" and "params" are optional. Names may refer to earlier entries or to
/// the base catalog. Every object is validated at its manifold's samples.
struct ConfigBundle {
  std::vector<ManifoldPtr> manifolds;
  std::vector<MapPtr> maps;
  std::vector<FramePtr> frames;
  std::map<std::string, std::vector<Point>, std::less<>> samples;
};

/// Throws ConfigError (JSON pointer + detail) on schema violations and
/// construction failures.
ConfigBundle parse_config(std::string_view json_text, const Catalog& base = Catalog::standard());
ConfigBundle load_config(const std::filesystem::path& path, const Catalog& base = Catalog::standard());

/// `base` extended with the bundle's objects; name clashes are errors.
Catalog merge(const Catalog& base, const ConfigBundle& bundle);

}  // namespace solgeom
