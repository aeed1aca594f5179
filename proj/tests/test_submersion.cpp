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
#include <vector>

#include "doctest.h"
#include "solgeom/catalog.hpp"
#include "solgeom/error.hpp"
#include "solgeom/mapcalc.hpp"
#include "solgeom/sampling.hpp"
#include "solgeom/submersion.hpp"

using namespace solgeom;

namespace {

const std::vector<Point>& pts() {
  static const auto p = random_points(3, 20, 31);
  return p;
}

double max_diff(const FrameCoefficients& a, const FrameCoefficients& b) {
  double d = 0;
  for (std::size_t i = 0; i < 27; ++i) d = std::max(d, std::abs(a.data[i] - b.data[i]));
  return d;
}

const Catalog& cat() { return Catalog::standard(); }

}  // namespace

TEST_CASE("integrability data of the two projection frames") {
  for (const auto& p : pts()) {
    const auto d1 = integrability_data(*cat().frame("case1"), p, 2);
    CHECK(std::abs(d1.f1.value()) < 1e-12);
    CHECK(d1.f2.value() == doctest::Approx(1.0));
    CHECK(std::abs(d1.f3.value()) < 1e-12);
    CHECK(d1.kappa1.value() == doctest::Approx(-1.0));
    CHECK(std::abs(d1.kappa2.value()) < 1e-12);
    CHECK(std::abs(d1.sigma.value()) < 1e-12);
    CHECK(d1.has_bracket_form());
    const auto d2 = integrability_data(*cat().frame("case2"), p, 2);
    CHECK(d2.f2.value() == doctest::Approx(-1.0));
    CHECK(d2.kappa1.value() == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(integrability_data(*cat().frame("case1"), pts()[0], 4), Error);
}

TEST_CASE("reconstruction from the data reproduces brackets and connection") {
  for (const char* name : {"sol_frame", "case1", "case1_alias", "case2", "angle_zero", "angle_pi1", "geodesic_pi1",
                           "euclid_frame", "euclid_rotated"}) {
    const auto f = cat().frame(name);
    const auto a = f->adapted();
    for (const auto& p : pts()) {
      const auto d = integrability_data(*f, p, 1);
      INFO(name);
      REQUIRE(d.has_bracket_form());
      CHECK(max_diff(reconstruct_brackets(d), frame_bracket(a, p)) < 1e-10);
      CHECK(max_diff(reconstruct_connection(d), frame_connection(a, p)) < 1e-10);
    }
  }
}

TEST_CASE("Jacobi identities hold for every registered frame") {
  for (const char* name : {"sol_frame", "case1", "case1_alias", "case2", "angle_zero", "angle_pi1", "geodesic_pi1",
                           "euclid_frame", "euclid_rotated"}) {
    for (const auto& p : pts()) {
      const auto r = check_jacobi(*cat().frame(name), p);
      INFO(name);
      CHECK(r.pass());
      CHECK(r.entries().size() == 4);
    }
  }
}

TEST_CASE("a frame with twisting horizontal distribution is flagged") {
  const auto f = catalog::cr1_frame(parse("0.2*x + 0.1*y"), parse("0.3*z + 0.1*x"), "generic");
  const Point p{0.3, -0.4, 0.5};
  const auto d = integrability_data(*f, p, 1);
  CHECK(!d.has_bracket_form());
  const auto r = check_jacobi(*f, p);
  const auto& last = r.entries().back();
  CHECK(last.label == kBracketFormLabel);
  CHECK(!last.pass);
  CHECK(!last.note.empty());
  CHECK(!r.pass());
}

TEST_CASE("curvature identities agree three ways") {
  for (const char* name : {"sol_frame", "case1", "case1_alias", "case2", "angle_zero", "angle_pi1", "geodesic_pi1"}) {
    for (const auto& p : pts()) {
      const auto r = check_curvature_identities(*cat().frame(name), p);
      INFO(name);
      CHECK(r.pass());
      CHECK(r.worst_residual() < 1e-7);
    }
  }
  const auto r = check_curvature_identities(*cat().frame("case1"), pts()[0]);
  CHECK(!r.entries()[6].note.empty());
  CHECK(frame_curvature(cat().frame("case1")->adapted(), pts()[0])(0, 1, 0, 1) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(check_curvature_identities(*cat().frame("euclid_frame"), pts()[0]), Error);
}

TEST_CASE("frame derivative identities and their preconditions") {
  for (const char* name : {"case1", "case2", "geodesic_pi1"}) {
    for (const auto& p : pts()) {
      const auto r = check_thb2(*cat().frame(name), p);
      INFO(name);
      CHECK(r.pass());
      CHECK(r.entries().size() == 13);
    }
  }
  auto kind = [](const FramePtr& f) {
    try {
      check_thb2(*f, pts()[0]);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind(cat().frame("sol_frame")) == ErrorKind::Precondition);
  CHECK(kind(cat().frame("case1_alias")) == ErrorKind::Precondition);
  CHECK(kind(catalog::tilted_frame()) == ErrorKind::Precondition);
}

TEST_CASE("base curvature is hyperbolic and constant along fibers") {
  for (const char* name : {"case1", "case2", "geodesic_pi1"}) {
    for (const auto& p : pts()) {
      const auto b = gauss_curvature_base(integrability_data(*cat().frame(name), p, 2));
      INFO(name);
      CHECK(b.value == doctest::Approx(-1.0));
      CHECK(b.adapted_value == doctest::Approx(-1.0));
      CHECK(std::abs(b.fiber_derivative) < 1e-8);
    }
  }
  for (const auto& p : pts())
    CHECK(std::abs(gauss_curvature_base(integrability_data(*cat().frame("euclid_rotated"), p, 2)).value) < 1e-14);
  CHECK_THROWS_AS(gauss_curvature_base(integrability_data(*cat().frame("case1"), pts()[0], 1)), Error);
}

TEST_CASE("harmonicity is the vanishing of the mean curvature of the fibers") {
  for (const auto& pr : cat().pairings()) {
    std::vector<IntegrabilityData> data;
    bool tension_free = true;
    for (const auto& p : pts()) {
      data.push_back(integrability_data(*cat().frame(pr.frame), p, 1));
      tension_free = tension_free && tension(*cat().map(pr.map), p).norm < 1e-9;
    }
    INFO(pr.map << "/" << pr.frame);
    CHECK(is_harmonic(data) == tension_free);
    CHECK(is_harmonic(data) == (pr.map == "euclid_projection"));
  }
}

TEST_CASE("biharmonic system for the two projections") {
  for (const auto& p : pts()) {
    const auto r1 = biharmonic_residual(integrability_data(*cat().frame("case1"), p, 2));
    CHECK(r1[0] == doctest::Approx(-2.0));
    CHECK(std::abs(r1[1]) < 1e-9);
    const auto r2 = biharmonic_residual(integrability_data(*cat().frame("case2"), p, 2));
    CHECK(r2[0] == doctest::Approx(2.0));
    CHECK(std::abs(r2[1]) < 1e-9);
    const auto r0 = biharmonic_residual(integrability_data(*cat().frame("euclid_frame"), p, 2));
    CHECK(r0[0] == 0.0);
    CHECK(r0[1] == 0.0);
    CHECK(std::hypot(r1[0], r1[1]) == doctest::Approx(bitension(*cat().map("pi1"), p).norm));
  }
  CHECK_THROWS_AS(biharmonic_residual(integrability_data(*cat().frame("case1"), pts()[0], 1)), Error);
  try {
    biharmonic_residual(integrability_data(*cat().frame("euclid_rotated"), pts()[0], 2));
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
}

TEST_CASE("the two Case I sign choices give the same data") {
  for (const auto& p : pts()) {
    const auto a = integrability_data(*cat().frame("case1"), p, 2);
    const auto b = integrability_data(*cat().frame("case1_alias"), p, 2);
    for (auto [x, y] : {std::pair{&a.f1, &b.f1}, {&a.f2, &b.f2}, {&a.f3, &b.f3}, {&a.kappa1, &b.kappa1},
                        {&a.kappa2, &b.kappa2}, {&a.sigma, &b.sigma}})
      CHECK(x->value() == doctest::Approx(y->value()));
  }
}

TEST_CASE("Sol chart detection") {
  CHECK(is_sol_chart(*catalog::sol(), pts()[0]));
  CHECK(!is_sol_chart(*catalog::euclidean(3), pts()[0]));
  CHECK(!is_sol_chart(*catalog::hyperbolic_xz(), Point{0.1, 0.2}));
}
