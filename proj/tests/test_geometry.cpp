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
#include <memory>

#include "doctest.h"
#include "solgeom/catalog.hpp"
#include "solgeom/error.hpp"
#include "solgeom/geometry.hpp"
#include "solgeom/sampling.hpp"
#include "support/oracles.hpp"

using namespace solgeom;

namespace {

ManifoldPtr make(std::string name, std::vector<std::string> coords, std::vector<std::vector<std::string>> upper) {
  std::vector<std::vector<Expression>> rows;
  for (const auto& r : upper) {
    rows.emplace_back();
    for (const auto& s : r) rows.back().push_back(parse(s));
  }
  return std::make_shared<ChartedManifold>(std::move(name), std::move(coords), rows);
}

// A generic non-diagonal 3-metric, positive definite on [-2,2]^3.
ManifoldPtr wobbly() {
  return make("wobbly", {"x", "y", "z"},
              {{"2 + sin(x*y)", "0.3*cos(z)", "0.1*x"}, {"1.5 + 0.2*y^2", "0.2*sin(x+z)"}, {"exp(0.3*z)"}});
}

std::vector<ManifoldPtr> test_manifolds() {
  const auto& c = Catalog::standard();
  return {c.manifold("sol"), c.manifold("hyperbolic_xz"), c.manifold("hyperbolic_yz"), c.manifold("euclidean3"),
          wobbly()};
}

}  // namespace

TEST_CASE("Sol metric in closed form") {
  const auto m = catalog::sol();
  CHECK((metric_at(*m, Point{0, 0, 0}) - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() == 0.0);
  const auto g = metric_at(*m, Point{0, 0, 1});
  CHECK(g(0, 0) == doctest::Approx(std::exp(2.0)));
  CHECK(g(1, 1) == doctest::Approx(std::exp(-2.0)));
  CHECK(g(2, 2) == doctest::Approx(1.0));
  CHECK(g(0, 1) == 0.0);
}

TEST_CASE("manifold construction is validated") {
  CHECK_THROWS_AS(make("bad", {"x", "y"}, {{"1", "0"}, {"w"}}), Error);
  CHECK_THROWS_AS(make("bad", {"x", "y", "z", "w"}, {{"1", "0", "0", "0"}, {"1", "0", "0"}, {"1", "0"}, {"1"}}),
                  Error);
  CHECK_THROWS_AS(make("bad", {"x", "y"}, {{"1", "0", "0"}, {"1"}}), Error);
  const auto indefinite = make("indef", {"x", "y"}, {{"1", "0"}, {"x"}});
  CHECK_NOTHROW(indefinite->metric_jets(Point{1, 0}, 1));
  try {
    indefinite->metric_jets(Point{-1, 0}, 1);
    FAIL("expected a geometry error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Geometry);
  }
}

TEST_CASE("Christoffel symbols agree with differenced metrics") {
  const auto pts = random_points(3, 20, 5);
  for (const auto& m : test_manifolds()) {
    for (const auto& p3 : pts) {
      const Point p(p3.begin(), p3.begin() + static_cast<std::ptrdiff_t>(m->dim()));
      const auto G = christoffel(*m, p);
      const auto ref = oracle::christoffel(*m, p);
      for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(G.data[i] - ref[i]) <= 1e-7 * (1 + std::abs(ref[i])));
    }
  }
}

TEST_CASE("Levi-Civita connection is metric compatible and torsion free") {
  const auto pts = random_points(3, 10, 6);
  for (const auto& m : test_manifolds()) {
    const std::size_t n = m->dim();
    for (const auto& p3 : pts) {
      const Point p(p3.begin(), p3.begin() + static_cast<std::ptrdiff_t>(n));
      const auto g = metric_jets(*m, p, 1);
      const auto G = christoffel(*m, p);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            CHECK(G(k, i, j) == doctest::Approx(G(k, j, i)));
            double rhs = 0;
            for (std::size_t l = 0; l < n; ++l)
              rhs += g.g[l * n + j].value() * G(l, k, i) + g.g[i * n + l].value() * G(l, k, j);
            CHECK(g.g[i * n + j].d(k) == doctest::Approx(rhs).epsilon(1e-10).scale(1.0));
          }
    }
  }
}

TEST_CASE("curvature symmetries and the first Bianchi identity") {
  const auto pts = random_points(3, 10, 7);
  for (const auto& m : test_manifolds()) {
    const std::size_t n = m->dim();
    for (const auto& p3 : pts) {
      const Point p(p3.begin(), p3.begin() + static_cast<std::ptrdiff_t>(n));
      const auto R = riemann_lowered(*m, p);
      double worst = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              worst = std::max(worst, std::abs(R(i, j, k, l) + R(j, i, k, l)));
              worst = std::max(worst, std::abs(R(i, j, k, l) + R(i, j, l, k)));
              worst = std::max(worst, std::abs(R(i, j, k, l) - R(k, l, i, j)));
              worst = std::max(worst, std::abs(R(i, j, k, l) + R(i, k, l, j) + R(i, l, j, k)));
            }
      CHECK(worst < 1e-9);
      const auto ric = ricci(*m, p);
      CHECK((ric - ric.transpose()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("Gauss curvature of model surfaces") {
  const auto sphere = make("sphere", {"t", "s"}, {{"1", "0"}, {"sin(t)^2"}});
  const auto flat_polar = make("polar", {"r", "s"}, {{"1", "0"}, {"r^2"}});
  SplitMix64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Point p{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    CHECK(gauss_curvature(*catalog::hyperbolic_xz(), p) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(gauss_curvature(*catalog::hyperbolic_yz(), p) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(gauss_curvature(*catalog::euclidean(2), p)) < 1e-15);
    const Point q{rng.uniform(0.3, 2.8), rng.uniform(-2, 2)};
    CHECK(gauss_curvature(*sphere, q) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(gauss_curvature(*flat_polar, q)) < 1e-10);
  }
  CHECK_THROWS_AS(gauss_curvature(*catalog::sol(), Point{0, 0, 0}), Error);
}

TEST_CASE("Riemann tensor contracted with coordinate vectors follows R(X,Y,Z,W) = g(R(Z,W)Y, X)") {
  // On the round sphere with the coordinate frame, R(d_t, d_s, d_t, d_s) = K |d_t ^ d_s|^2 = sin^2 t.
  const auto sphere = make("sphere", {"t", "s"}, {{"1", "0"}, {"sin(t)^2"}});
  const Point p{1.1, 0.4};
  const auto R = riemann_lowered(*sphere, p);
  CHECK(R(0, 1, 0, 1) == doctest::Approx(std::sin(1.1) * std::sin(1.1)));
}

TEST_CASE("Sol frame golden values") {
  const auto f = catalog::sol_frame();
  for (const auto& p : random_points(3, 50, 9)) {
    const auto br = frame_bracket(*f, p);
    CHECK(br(0, 0, 2) == doctest::Approx(1.0));   // [E1,E3] = E1
    CHECK(br(1, 1, 2) == doctest::Approx(-1.0));  // [E2,E3] = -E2
    CHECK(std::abs(br(2, 0, 1)) < 1e-14);
    const auto w = frame_connection(*f, p);
    CHECK(w(2, 0, 0) == doctest::Approx(-1.0));  // D_E1 E1 = -E3
    CHECK(w(0, 0, 2) == doctest::Approx(1.0));   // D_E1 E3 = E1
    CHECK(w(2, 1, 1) == doctest::Approx(1.0));   // D_E2 E2 = E3
    CHECK(w(1, 1, 2) == doctest::Approx(-1.0));  // D_E2 E3 = -E2
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(w(k, 2, j)) < 1e-14);  // D_E3 = 0
    const auto R = frame_curvature(*f, p);
    CHECK(R(0, 1, 0, 1) == doctest::Approx(1.0));
    CHECK(R(0, 2, 0, 2) == doctest::Approx(-1.0));
    CHECK(R(1, 2, 1, 2) == doctest::Approx(-1.0));
    CHECK(std::abs(R(0, 1, 0, 2)) < 1e-12);
    CHECK(std::abs(R(0, 1, 1, 2)) < 1e-12);
  }
}

TEST_CASE("frame connection agrees with coordinate Christoffel symbols") {
  // g(D_{e_i} e_j, e_k) = g(e_i(e_j) + Gamma(e_i, e_j), e_k) in coordinates.
  const auto f = catalog::cr1_frame(parse("0.3+0.1*z"), parse("0.2+0.05*x"));
  const auto& m = f->manifold();
  for (const auto& p : random_points(3, 10, 10)) {
    const auto legs = f->leg_jets(p, 1);
    const auto G = christoffel(m, p);
    const auto g = metric_at(m, p);
    const auto w = frame_connection(*f, p);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Eigen::Vector3d v = Eigen::Vector3d::Zero();
        for (std::size_t c = 0; c < 3; ++c) {
          for (std::size_t a = 0; a < 3; ++a) v(c) += legs[i][a].value() * legs[j][c].d(a);
          for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) v(c) += G(c, a, b) * legs[i][a].value() * legs[j][b].value();
        }
        for (std::size_t k = 0; k < 3; ++k) {
          Eigen::Vector3d ek;
          for (std::size_t c = 0; c < 3; ++c) ek(c) = legs[k][c].value();
          CHECK(w(k, i, j) == doctest::Approx(v.dot(g * ek)).epsilon(1e-10).scale(1.0));
        }
      }
  }
}

TEST_CASE("frames are checked for orthonormality") {
  const auto m = catalog::sol();
  std::array<std::vector<Expression>, 3> legs = {
      std::vector<Expression>{parse("exp(-z)"), parse("0"), parse("0")},
      std::vector<Expression>{parse("0"), parse("exp(z)"), parse("0")},
      std::vector<Expression>{parse("0"), parse("0"), parse("2")}};
  const FrameField f("stretched", m, legs, 2);
  CHECK(f.orthonormality_residual(Point{0, 0, 0}) == doctest::Approx(3.0));
  CHECK_THROWS_AS(f.leg_jets(Point{0, 0, 0}, 0), Error);
  CHECK(catalog::sol_frame()->orthonormality_residual(Point{1, 2, 3}) < 1e-15);
}

TEST_CASE("frame components against the Sol frame") {
  const auto ref = catalog::sol_frame();
  const auto a = frame_components(*catalog::case1_frame(), *ref, Point{0.5, -1, 0.7});
  Eigen::Matrix3d want;
  want << 0, 0, 1, 0, 1, 0, -1, 0, 0;
  CHECK((a - want).cwiseAbs().maxCoeff() < 1e-14);
  const auto b = frame_components(*catalog::cr1_frame(Expression::number(0), Expression::number(0)), *ref,
                                  Point{0.2, 0.1, -0.4});
  want << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  CHECK((b - want).cwiseAbs().maxCoeff() < 1e-14);
}
