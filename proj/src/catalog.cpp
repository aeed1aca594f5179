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

#include "solgeom/catalog.hpp"

#include <algorithm>
#include <utility>

#include "solgeom/error.hpp"

namespace solgeom {

namespace catalog {

namespace {

Expression P(std::string_view text) { return parse(text); }

std::vector<Expression> leg(std::string_view a, std::string_view b, std::string_view c) {
  return {P(a), P(b), P(c)};
}

}  // namespace

ManifoldPtr sol() {
  static const ManifoldPtr m = std::make_shared<ChartedManifold>(
      "sol", std::vector<std::string>{"x", "y", "z"},
      std::vector<std::vector<Expression>>{{P("exp(2*z)"), P("0"), P("0")}, {P("exp(-2*z)"), P("0")}, {P("1")}});
  return m;
}

ManifoldPtr hyperbolic_xz() {
  static const ManifoldPtr m = std::make_shared<ChartedManifold>(
      "hyperbolic_xz", std::vector<std::string>{"x", "z"},
      std::vector<std::vector<Expression>>{{P("exp(2*z)"), P("0")}, {P("1")}});
  return m;
}

ManifoldPtr hyperbolic_yz() {
  static const ManifoldPtr m = std::make_shared<ChartedManifold>(
      "hyperbolic_yz", std::vector<std::string>{"y", "z"},
      std::vector<std::vector<Expression>>{{P("exp(-2*z)"), P("0")}, {P("1")}});
  return m;
}

ManifoldPtr euclidean(std::size_t n) {
  static const ManifoldPtr e2 = std::make_shared<ChartedManifold>(
      "euclidean2", std::vector<std::string>{"u", "v"},
      std::vector<std::vector<Expression>>{{P("1"), P("0")}, {P("1")}});
  static const ManifoldPtr e3 = std::make_shared<ChartedManifold>(
      "euclidean3", std::vector<std::string>{"x", "y", "z"},
      std::vector<std::vector<Expression>>{{P("1"), P("0"), P("0")}, {P("1"), P("0")}, {P("1")}});
  if (n == 2) return e2;
  if (n == 3) return e3;
  throw Error(ErrorKind::InvalidArgument, "euclidean: dimension must be 2 or 3");
}

FramePtr sol_frame() {
  static const FramePtr f = std::make_shared<FrameField>(
      "sol_frame", sol(),
      std::array{leg("exp(-z)", "0", "0"), leg("0", "exp(z)", "0"), leg("0", "0", "1")}, 0);
  return f;
}

FramePtr case1_frame() {
  static const FramePtr f = std::make_shared<FrameField>(
      "case1", sol(), std::array{leg("0", "0", "1"), leg("0", "exp(z)", "0"), leg("-exp(-z)", "0", "0")}, 2);
  return f;
}

FramePtr case1_alias_frame() {
  static const FramePtr f = std::make_shared<FrameField>(
      "case1_alias", sol(), std::array{leg("0", "0", "1"), leg("0", "exp(z)", "0"), leg("exp(-z)", "0", "0")}, 2);
  return f;
}

FramePtr case2_frame() {
  static const FramePtr f = std::make_shared<FrameField>(
      "case2", sol(), std::array{leg("0", "0", "1"), leg("exp(-z)", "0", "0"), leg("0", "exp(z)", "0")}, 2);
  return f;
}

FramePtr cr1_frame(const Expression& theta, const Expression& alpha, std::string name) {
  const Expression z = Expression::variable("z");
  const Expression zero = Expression::number(0);
  const Expression ex = exp(-z), ey = exp(z);
  const Expression ct = cos(theta), st = sin(theta), ca = cos(alpha), sa = sin(alpha);
  std::array<std::vector<Expression>, 3> legs = {
      std::vector<Expression>{zero, ct * ey, st},
      std::vector<Expression>{sa * ex, -(st * ca) * ey, ct * ca},
      std::vector<Expression>{ca * ex, st * sa * ey, -(ct * sa)},
  };
  return std::make_shared<FrameField>(std::move(name), sol(), std::move(legs), 2);
}

FramePtr geodesic_pi1_frame() {
  // cos t = e^z / 10, sin t = sqrt(1 - e^{2z} / 100); valid for z < log 10.
  static const FramePtr f = std::make_shared<FrameField>(
      "geodesic_pi1", sol(),
      std::array{leg("0", "0.1*exp(2*z)", "sqrt(1-0.01*exp(2*z))"),
                 leg("0", "-sqrt(1-0.01*exp(2*z))*exp(z)", "0.1*exp(z)"), leg("exp(-z)", "0", "0")},
      2);
  return f;
}

FramePtr euclid_frame() {
  static const FramePtr f = std::make_shared<FrameField>(
      "euclid_frame", euclidean(3), std::array{leg("1", "0", "0"), leg("0", "1", "0"), leg("0", "0", "1")}, 2);
  return f;
}

FramePtr euclid_rotated_frame() {
  static const FramePtr f = std::make_shared<FrameField>(
      "euclid_rotated", euclidean(3),
      std::array{leg("cos(0.4+0.3*x-0.2*y+0.25*z)", "sin(0.4+0.3*x-0.2*y+0.25*z)", "0"),
                 leg("-sin(0.4+0.3*x-0.2*y+0.25*z)", "cos(0.4+0.3*x-0.2*y+0.25*z)", "0"), leg("0", "0", "1")},
      2);
  return f;
}

FramePtr tilted_frame() {
  static const FramePtr f = std::make_shared<FrameField>(
      "e1_tilted", sol(),
      std::array{leg("0.1*exp(-z)", "sqrt(0.99)*exp(z)", "0"), leg("-sqrt(0.99)*exp(-z)", "0.1*exp(z)", "0"),
                 leg("0", "0", "1")},
      2);
  return f;
}

MapPtr pi1() {
  static const MapPtr m =
      std::make_shared<SmoothMap>("pi1", sol(), hyperbolic_yz(), std::vector<Expression>{P("y"), P("z")});
  return m;
}

MapPtr pi2() {
  static const MapPtr m =
      std::make_shared<SmoothMap>("pi2", sol(), hyperbolic_xz(), std::vector<Expression>{P("x"), P("z")});
  return m;
}

MapPtr biharmonic_example(double A, double B, double C, double D) {
  return std::make_shared<SmoothMap>("example", sol(), euclidean(2),
                                     std::vector<Expression>{P("y"), P("A*z^3+B*z^2+C*z+D")},
                                     ParamMap{{"A", A}, {"B", B}, {"C", C}, {"D", D}});
}

MapPtr identity_sol() {
  static const MapPtr m =
      std::make_shared<SmoothMap>("identity_sol", sol(), sol(), std::vector<Expression>{P("x"), P("y"), P("z")});
  return m;
}

MapPtr leaf_embedding() {
  static const MapPtr m = std::make_shared<SmoothMap>("leaf_embedding", hyperbolic_yz(), sol(),
                                                      std::vector<Expression>{P("0"), P("y"), P("z")});
  return m;
}

MapPtr euclid_projection() {
  static const MapPtr m = std::make_shared<SmoothMap>("euclid_projection", euclidean(3), euclidean(2),
                                                      std::vector<Expression>{P("x"), P("y")});
  return m;
}

}  // namespace catalog

std::string_view entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::Manifold:
      return "manifold";
    case EntryKind::Frame:
      return "frame";
    case EntryKind::Map:
      return "map";
  }
  return "?";
}

namespace {

Catalog build_standard() {
  using namespace catalog;
  Catalog c;
  auto M = [&](std::string name, ManifoldPtr p, std::string prov) {
    c.add({std::move(name), EntryKind::Manifold, std::move(prov), std::move(p)});
  };
  auto F = [&](std::string name, FramePtr p, std::string prov) {
    c.add({std::move(name), EntryKind::Frame, std::move(prov), std::move(p)});
  };
  auto Mp = [&](std::string name, MapPtr p, std::string prov) {
    c.add({std::move(name), EntryKind::Map, std::move(prov), std::move(p)});
  };
  M("sol", sol(), "e^{2z}dx^2 + e^{-2z}dy^2 + dz^2");
  M("hyperbolic_xz", hyperbolic_xz(), "e^{2z}dx^2 + dz^2");
  M("hyperbolic_yz", hyperbolic_yz(), "e^{-2z}dy^2 + dz^2");
  M("euclidean2", euclidean(2), "du^2 + dv^2");
  M("euclidean3", euclidean(3), "dx^2 + dy^2 + dz^2");
  F("sol_frame", sol_frame(), "E1 = e^{-z}d_x, E2 = e^{z}d_y, E3 = d_z");
  F("case1", case1_frame(), "e1 = E3, e2 = E2, e3 = -E1");
  F("case1_alias", case1_alias_frame(), "e1 = E3, e2 = E2, e3 = E1");
  F("case2", case2_frame(), "e1 = E3, e2 = E1, e3 = E2");
  F("angle_zero", cr1_frame(Expression::number(0), Expression::number(0), "angle_zero"),
    "e1 = cos t E2 + sin t E3 with t = a = 0");
  F("angle_pi1", cr1_frame(parse("0.3+0.1*z+0.05*x"), Expression::number(0), "angle_pi1"),
    "e1 = cos t E2 + sin t E3 with t = 0.3 + 0.1z + 0.05x, a = 0");
  F("geodesic_pi1", geodesic_pi1_frame(), "e1 = cos t E2 + sin t E3 with e1(t) = -cos t");
  F("euclid_frame", euclid_frame(), "coordinate frame of R^3");
  F("euclid_rotated", euclid_rotated_frame(), "coordinate frame of R^3 rotated about d_z");
  Mp("pi1", pi1(), "(x, y, z) -> (y, z)");
  Mp("pi2", pi2(), "(x, y, z) -> (x, z)");
  Mp("example", biharmonic_example(1, 1, 0, 0), "(x, y, z) -> (y, Az^3 + Bz^2 + Cz + D)");
  Mp("identity_sol", identity_sol(), "identity of Sol");
  Mp("leaf_embedding", leaf_embedding(), "(y, z) -> (0, y, z)");
  Mp("euclid_projection", euclid_projection(), "(x, y, z) -> (x, y)");
  c.add_pairing({"pi1", "case1"});
  c.add_pairing({"pi1", "case1_alias"});
  c.add_pairing({"pi1", "sol_frame"});
  c.add_pairing({"pi1", "geodesic_pi1"});
  c.add_pairing({"pi2", "case2"});
  c.add_pairing({"euclid_projection", "euclid_frame"});
  c.add_pairing({"euclid_projection", "euclid_rotated"});
  return c;
}

}  // namespace

const Catalog& Catalog::standard() {
  static const Catalog c = build_standard();
  return c;
}

Catalog Catalog::without(std::string_view name) const {
  Catalog c;
  for (const auto& e : entries_)
    if (e.name != name) c.entries_.push_back(e);
  for (const auto& p : pairings_)
    if (p.map != name && p.frame != name) c.pairings_.push_back(p);
  return c;
}

void Catalog::add(CatalogEntry entry) {
  if (contains(entry.name)) throw Error(ErrorKind::InvalidArgument, "duplicate catalog name '" + entry.name + "'");
  entries_.push_back(std::move(entry));
}

void Catalog::add_pairing(Pairing p) {
  require(p.map, EntryKind::Map);
  require(p.frame, EntryKind::Frame);
  pairings_.push_back(std::move(p));
}

const CatalogEntry* Catalog::find(std::string_view name) const noexcept {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const CatalogEntry& e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

const CatalogEntry& Catalog::require(std::string_view name, EntryKind kind) const {
  const CatalogEntry* e = find(name);
  if (!e) throw Error(ErrorKind::NotFound, "no catalog entry named '" + std::string(name) + "'");
  if (e->kind != kind) {
    throw Error(ErrorKind::NotFound, "catalog entry '" + std::string(name) + "' is a " +
                                         std::string(entry_kind_name(e->kind)) + ", not a " +
                                         std::string(entry_kind_name(kind)));
  }
  return *e;
}

ManifoldPtr Catalog::manifold(std::string_view name) const {
  return std::get<ManifoldPtr>(require(name, EntryKind::Manifold).payload);
}

FramePtr Catalog::frame(std::string_view name) const {
  return std::get<FramePtr>(require(name, EntryKind::Frame).payload);
}

MapPtr Catalog::map(std::string_view name) const { return std::get<MapPtr>(require(name, EntryKind::Map).payload); }

}  // namespace solgeom
