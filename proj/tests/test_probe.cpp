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

#include <cmath>

#include "doctest.h"
#include "solgeom/probe.hpp"
#include "solgeom/sampling.hpp"
#include "support/oracles.hpp"

using namespace solgeom;

TEST_CASE("residual matches the written-out system") {
  SplitMix64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const RchPoint x = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    CHECK(rch_residual(x) == doctest::Approx(oracle::rch_l1(x[0], x[1], x[2], x[3])));
    CHECK(rch_residual(x, true) == doctest::Approx(oracle::rch_l1(x[0], x[1], x[2], x[3], true)));
    const auto eq = rch_equations(x);
    double l1 = 0;
    for (double e : eq) l1 += std::abs(e);
    CHECK(l1 == doctest::Approx(rch_residual(x)));
  }
}

TEST_CASE("residual is even in every variable") {
  const RchPoint x = {0.3, -0.8, 1.1, -0.2};
  for (std::size_t i = 0; i < 4; ++i) {
    RchPoint y = x;
    y[i] = -y[i];
    CHECK(rch_residual(y) == rch_residual(x));
  }
}

TEST_CASE("the grid minimum is one") {
  // h puts sqrt(1/2) on the grid so the exact minimizer is sampled.
  const auto g = oracle::rch_grid(std::sqrt(0.5) / 47);
  CHECK(g.value >= 1.0 - 1e-12);
  CHECK(g.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("the probe finds the minimum and stays above the bound") {
  const auto r = probe_rch_infeasibility(200, 42);
  CHECK(r.min_residual >= 0.9);
  CHECK(r.min_residual == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.restarts == 200);
  CHECK(r.seed == 42);
  CHECK(!r.control);
  for (double v : r.argmin) CHECK(v >= 0.0);
  CHECK(rch_residual(r.argmin) == doctest::Approx(r.min_residual));
}

TEST_CASE("the control system is solvable") {
  CHECK(rch_residual({1, 0, 0, 1}, true) == 0.0);
  const auto r = probe_rch_infeasibility(200, 42, true);
  CHECK(r.control);
  CHECK(r.min_residual < 1e-8);
  CHECK(r.argmin[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.argmin[3] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("the probe is deterministic") {
  const auto a = probe_rch_infeasibility(50, 9);
  const auto b = probe_rch_infeasibility(50, 9);
  CHECK(a.min_residual == b.min_residual);
  CHECK(a.argmin == b.argmin);
}
