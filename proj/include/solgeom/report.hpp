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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace solgeom {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

struct Tolerances {
  double algebraic = 1e-9;
  double curvature = 1e-7;
  double bitension = 1e-6;
  double tension = 1e-8;
  double jacobi = 1e-8;
  double frame_derivative = 1e-8;
  double fiber = 1e-8;
  double connection = 1e-10;
  double submersion = 1e-9;
  double orthonormality = 1e-10;
  /// Lower bound on the probe minimum.
  double rch = 0.9;
  /// Upper bound on the control-system minimum.
  double control = 1e-8;

  static const std::vector<std::string_view>& keys();
  /// Throws Error(InvalidArgument) for unknown keys or non-positive values.
  void set(std::string_view key, double value);
  double get(std::string_view key) const;
  json to_json() const;
};

/// One line of a report. `pass` is decided by the producer; for most records it
/// means worst_residual <= tolerance.
struct Record {
  std::string name;
  std::string anchor;
  std::size_t points = 0;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  json value;
  std::string detail;

  json to_json() const;
};

/// Running maximum of absolute residuals; NaN poisons the result.
class Worst {
 public:
  void operator()(double r) noexcept {
    r = std::abs(r);
    if (std::isnan(r) || std::isnan(worst_)) {
      worst_ = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    worst_ = std::max(worst_, r);
  }
  double value() const noexcept { return worst_; }
  bool within(double tol) const noexcept { return worst_ <= tol; }

 private:
  double worst_ = 0.0;
};

}  // namespace solgeom
