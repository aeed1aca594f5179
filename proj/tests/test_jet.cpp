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
#include "solgeom/jet.hpp"

using namespace solgeom;

namespace {

void check_close(const Jet& a, const Jet& b, double tol = 1e-13) {
  REQUIRE(a.coefficients().size() == b.coefficients().size());
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    CHECK(std::abs(a.coefficients()[i] - b.coefficients()[i]) <= tol * (1 + std::abs(b.coefficients()[i])));
  }
}

}  // namespace

TEST_CASE("layout sizes count monomials") {
  CHECK(JetLayout::get(3, 0).size() == 1);
  CHECK(JetLayout::get(3, 1).size() == 4);
  CHECK(JetLayout::get(3, 2).size() == 10);
  CHECK(JetLayout::get(3, 4).size() == 35);
  CHECK(JetLayout::get(2, 4).size() == 15);
  CHECK(JetLayout::get(3, 4).size_for(2) == 10);
}

TEST_CASE("variables and constants") {
  const Jet x = Jet::variable(2, 3, 0, 1.5);
  CHECK(x.value() == 1.5);
  CHECK(x.d(0) == 1.0);
  CHECK(x.d(1) == 0.0);
  CHECK(x.d(0, 0) == 0.0);
  const Jet c = Jet::constant(2, 3, 4.0);
  CHECK(c.is_constant());
  CHECK(!x.is_constant());
}

TEST_CASE("polynomial arithmetic gives exact partials") {
  const Jet x = Jet::variable(2, 4, 0, 2.0);
  const Jet y = Jet::variable(2, 4, 1, -1.0);
  const Jet f = x * x * y + 3.0 * y * y * y;  // x^2 y + 3 y^3
  CHECK(f.value() == -4.0 - 3.0);
  CHECK(f.d(0) == 2 * 2.0 * -1.0);
  CHECK(f.d(1) == 4.0 + 9.0);
  CHECK(f.d(0, 1) == 4.0);
  CHECK(f.d(1, 1) == 18.0 * -1.0);
  CHECK(f.partial({1, 1, 1}) == 18.0);
  CHECK(f.partial({0, 0, 1}) == 2.0);
  CHECK(f.partial({0, 0, 1, 1}) == 0.0);
}

TEST_CASE("elementary functions satisfy their identities") {
  const Jet u = Jet::variable(3, 4, 0, 0.3) * Jet::variable(3, 4, 1, 0.7) + Jet::variable(3, 4, 2, -0.2);
  check_close(log(exp(u)), u);
  check_close(sin(u) * sin(u) + cos(u) * cos(u), Jet::constant(3, 4, 1.0));
  check_close(cosh(u) * cosh(u) - sinh(u) * sinh(u), Jet::constant(3, 4, 1.0));
  const Jet v = u + 2.0;
  check_close(sqrt(v) * sqrt(v), v);
  check_close(pow(v, 0.5), sqrt(v));
  check_close(reciprocal(v) * v, Jet::constant(3, 4, 1.0));
  check_close(tan(u), sin(u) / cos(u));
  check_close(pow(v, 3.0), v * v * v);
}

TEST_CASE("derivative and truncation are compatible") {
  const Jet x = Jet::variable(2, 4, 0, 0.5);
  const Jet y = Jet::variable(2, 4, 1, 1.5);
  const Jet f = exp(x * y);
  const Jet fx = f.derivative(0);
  CHECK(fx.order() == 3);
  CHECK(fx.value() == doctest::Approx(1.5 * std::exp(0.75)));
  CHECK(fx.d(1) == doctest::Approx(f.d(0, 1)));
  const Jet t = f.truncated(2);
  CHECK(t.order() == 2);
  CHECK(t.d(0, 1) == doctest::Approx(f.d(0, 1)));
}

TEST_CASE("mixed orders truncate to the lower order") {
  const Jet a = Jet::variable(1, 4, 0, 1.0);
  const Jet b = Jet::variable(1, 2, 0, 1.0);
  const Jet c = a * b;
  CHECK(c.order() == 2);
  CHECK(c.d(0, 0) == doctest::Approx(2.0));
}

TEST_CASE("multivariate composition is the chain rule") {
  // outer(u, v) = u * v^2 with u = sin t, v = t^2 (one variable t).
  const Jet t = Jet::variable(1, 4, 0, 0.8);
  const Jet u = sin(t), v = t * t;
  const Jet U = Jet::variable(2, 4, 0, u.value());
  const Jet V = Jet::variable(2, 4, 1, v.value());
  const Jet outer = U * V * V;
  const Jet inner[] = {u, v};
  check_close(compose(outer, inner), u * v * v, 1e-12);
}
