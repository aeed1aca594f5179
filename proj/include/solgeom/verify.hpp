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
#include <string_view>
#include <vector>

#include "solgeom/catalog.hpp"
#include "solgeom/report.hpp"

namespace solgeom {

struct VerifyOptions {
  std::uint64_t seed = 7;
  int restarts = 1000;
  /// Random points per record (3-d and 2-d sets are drawn separately).
  std::size_t samples = 50;
  Tolerances tol;
};

/// Catalog entries each record depends on, in record order.
struct CoverageRow {
  std::string_view record;
  std::vector<std::string_view> entries;
};

const std::vector<CoverageRow>& coverage_table();

/// Throws Error(NotFound) naming the first record whose dependency is missing.
void assert_coverage(const Catalog& catalog);

/// The full verification suite. Records come out in coverage_table() order.
std::vector<Record> paper_verify(const Catalog& catalog, const VerifyOptions& options);

}  // namespace solgeom
