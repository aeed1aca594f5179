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

#include <set>

#include "doctest.h"
#include "solgeom/error.hpp"
#include "solgeom/sampling.hpp"

using namespace solgeom;

TEST_CASE("SplitMix64 reference outputs") {
  SplitMix64 g(0);
  CHECK(g.next() == 0xe220a8397b1dcdafULL);
  CHECK(g.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(g.next() == 0x06c45d188009454fULL);
}

TEST_CASE("uniform draws stay in range") {
  SplitMix64 g(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = g.uniform();
    CHECK((u >= 0.0 && u < 1.0));
  }
}

TEST_CASE("random points fill the box and depend on the seed") {
  const auto a = random_points(3, 500, 1);
  CHECK(a.size() == 500);
  for (const auto& p : a) {
    REQUIRE(p.size() == 3);
    for (double x : p) CHECK((x >= -kBoxHalfWidth && x < kBoxHalfWidth));
  }
  CHECK(random_points(3, 500, 1) == a);
  CHECK(random_points(3, 500, 2) != a);
}

TEST_CASE("substreams are distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 16; ++i) seen.insert(substream_seed(7, i));
  CHECK(seen.size() == 16);
  CHECK(substream_seed(7, 3) == substream_seed(7, 3));
  CHECK(substream_seed(7, 3) != substream_seed(8, 3));
}

TEST_CASE("Halton points") {
  const auto h = halton_points(3, 4);
  CHECK(h[0][0] == doctest::Approx(0.0));           // 1/2 -> 0
  CHECK(h[0][1] == doctest::Approx(-2.0 + 4.0 / 3));
  CHECK(h[1][0] == doctest::Approx(-1.0));          // 1/4
  CHECK(h[2][2] == doctest::Approx(-2.0 + 4 * 0.6));
  CHECK_THROWS_AS(halton_points(4, 1), Error);
}

TEST_CASE("grid points") {
  const auto g = grid_points(2, 3);
  CHECK(g.size() == 9);
  CHECK(g.front() == Point{-2, -2});
  CHECK(g.back() == Point{2, 2});
  CHECK(grid_points(3, 1) == std::vector<Point>{Point{0, 0, 0}});
}

TEST_CASE("sample specs") {
  CHECK(parse_points("random:10:3", 3) == random_points(3, 10, 3));
  CHECK(parse_points("quasi:8", 2) == halton_points(2, 8));
  CHECK(parse_points("grid:2", 3).size() == 8);
  const auto explicit_pts = parse_points("0,0,1; 1.5,-2,0.25", 3);
  REQUIRE(explicit_pts.size() == 2);
  CHECK(explicit_pts[1] == Point{1.5, -2, 0.25});
  for (const char* bad : {"random:10", "random:x:1", "quasi:", "grid:-1", "1,2", "1,,3", "", "1,2,nan", "a,b,c"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_points(bad, 3), Error);
  }
}
