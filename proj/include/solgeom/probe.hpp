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

#include <array>
#include <cstdint>

namespace solgeom {

/// Variables (sigma, a13, a23, a33) of the harmonic constraint subsystem.
using RchPoint = std::array<double, 4>;

/// Residuals of
///   sigma^2 - 2 a23^2 + s = 0,  sigma^2 - 2 a13^2 + s = 0,  2 a13 a23 = 0,  a13^2 + a23^2 + a33^2 = 1
/// with s = 1, or s = -1 for the feasible control system.
std::array<double, 4> rch_equations(const RchPoint& x, bool control = false);
/// Sum of absolute residuals.
double rch_residual(const RchPoint& x, bool control = false);

struct RchProbeResult {
  double min_residual = 0.0;
  /// Representative minimizer with nonnegative entries (the system is even in each variable);
  /// the lexicographically smallest among minima within 1e-9 of the best.
  RchPoint argmin{};
  int restarts = 0;
  std::uint64_t seed = 0;
  bool control = false;
};

/// Multistart local minimization of the L1 residual: each restart draws a start
/// uniformly from [-1.5, 1.5]^4 on its own SplitMix64 substream, runs Nelder-Mead,
/// then a damped Gauss-Newton polish, and keeps the lower residual.
RchProbeResult probe_rch_infeasibility(int restarts, std::uint64_t seed, bool control = false);

}  // namespace solgeom
