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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "solgeom/catalog.hpp"
#include "solgeom/error.hpp"
#include "solgeom/sampling.hpp"
#include "solgeom/verify.hpp"

using namespace solgeom;

TEST_CASE("standard names are unique and typed") {
  const auto& c = Catalog::standard();
  std::set<std::string> names;
  for (const auto& e : c.entries()) {
    CHECK(names.insert(e.name).second);
    CHECK(!e.provenance.empty());
  }
  CHECK(names.size() == 20);
  CHECK(c.manifold("sol")->dim() == 3);
  CHECK(c.frame("case1")->vertical() == 2);
  CHECK(c.map("pi1")->target().name() == "hyperbolic_yz");
  CHECK_THROWS_AS(c.map("sol"), Error);
  try {
    c.frame("nonexistent");
    FAIL("expected NotFound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFound);
  }
  CHECK_THROWS_AS(Catalog(c).add({"sol", EntryKind::Manifold, "dup", catalog::sol()}), Error);
}

TEST_CASE("removing an entry drops its pairings") {
  const auto& c = Catalog::standard();
  const auto d = c.without("case1");
  CHECK(!d.contains("case1"));
  CHECK(d.entries().size() == c.entries().size() - 1);
  for (const auto& p : d.pairings()) CHECK(p.frame != "case1");
  CHECK(d.pairings().size() == c.pairings().size() - 1);
}

TEST_CASE("every standard entry is covered by some record") {
  const auto& c = Catalog::standard();
  std::set<std::string_view> covered;
  for (const auto& row : coverage_table())
    for (auto e : row.entries) covered.insert(e);
  for (const auto& e : c.entries()) {
    INFO(e.name);
    CHECK(covered.count(e.name) == 1);
  }
  CHECK_NOTHROW(assert_coverage(c));
}

TEST_CASE("a catalog missing any covered entry is rejected") {
  const auto& c = Catalog::standard();
  VerifyOptions opt;
  opt.samples = 2;
  opt.restarts = 2;
  for (const auto& e : c.entries()) {
    const auto d = c.without(e.name);
    INFO(e.name);
    try {
      assert_coverage(d);
      FAIL("coverage accepted a catalog without " << e.name);
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotFound);
    }
    CHECK_THROWS_AS(paper_verify(d, opt), Error);
  }
}

TEST_CASE("construction examples") {
  const auto m = catalog::sol();
  CHECK(m->coords() == std::vector<std::string>{"x", "y", "z"});
  const auto ex = catalog::biharmonic_example(1, 2, 3, 4);
  CHECK(ex->params().at("B") == 2.0);
  CHECK(ex->image(Point{5, 6, 1})[1] == doctest::Approx(1 + 2 + 3 + 4));
  const auto theta = parse("0.3*z");
  const auto f = catalog::cr1_frame(theta, Expression::number(0.0), "t");
  CHECK(f->name() == "t");
  CHECK(f->orthonormality_residual(Point{0.1, 0.2, 0.3}) < 1e-12);
}

TEST_CASE("frames are orthonormal on a hundred points") {
  const auto& c = Catalog::standard();
  const auto pts = random_points(3, 100, 51);
  for (const auto& e : c.entries()) {
    if (e.kind != EntryKind::Frame) continue;
    const auto f = c.frame(e.name);
    for (const auto& p : pts) CHECK(f->orthonormality_residual(p) < 1e-10);
  }
  for (const auto& p : pts) CHECK(catalog::tilted_frame()->orthonormality_residual(p) < 1e-10);
}
