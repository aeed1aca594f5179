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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "solgeom/geometry.hpp"
#include "solgeom/mapcalc.hpp"

namespace solgeom {

namespace catalog {

/// (R^3, e^{2z}dx^2 + e^{-2z}dy^2 + dz^2), coordinates x, y, z.
ManifoldPtr sol();
/// (R^2, e^{2z}dx^2 + dz^2), coordinates x, z.
ManifoldPtr hyperbolic_xz();
/// (R^2, e^{-2z}dy^2 + dz^2), coordinates y, z.
ManifoldPtr hyperbolic_yz();
/// Flat R^n; coordinates u, v for n = 2 and x, y, z for n = 3.
ManifoldPtr euclidean(std::size_t n);

/// E1 = e^{-z} d_x, E2 = e^{z} d_y, E3 = d_z with E1 vertical.
FramePtr sol_frame();
/// {E3, E2, -E1}, e3 vertical.
FramePtr case1_frame();
/// {E3, E2, E1}, e3 vertical.
FramePtr case1_alias_frame();
/// {E3, E1, E2}, e3 vertical.
FramePtr case2_frame();
/// e1 = cos t E2 + sin t E3, e2 = sin a E1 - sin t cos a E2 + cos t cos a E3,
/// e3 = cos a E1 + sin t sin a E2 - cos t sin a E3.
FramePtr cr1_frame(const Expression& theta, const Expression& alpha, std::string name = "angle_frame");
/// Rotation of {E2, E3} about the vertical E1 with cos t = e^z / 10, so D_e1 e1 = 0.
FramePtr geodesic_pi1_frame();
/// Coordinate frame of flat R^3, d_z vertical.
FramePtr euclid_frame();
/// Coordinate frame of flat R^3 rotated about d_z by 0.4 + 0.3x - 0.2y + 0.25z.
FramePtr euclid_rotated_frame();
/// Orthonormal Sol frame whose e1 has an E1 component 0.1.
FramePtr tilted_frame();

/// (x, y, z) -> (y, z) onto hyperbolic_yz.
MapPtr pi1();
/// (x, y, z) -> (x, z) onto hyperbolic_xz.
MapPtr pi2();
/// (x, y, z) -> (y, A z^3 + B z^2 + C z + D) onto euclidean(2).
MapPtr biharmonic_example(double A, double B, double C, double D);
MapPtr identity_sol();
/// Leaf x = 0: (y, z) -> (0, y, z) from hyperbolic_yz into Sol.
MapPtr leaf_embedding();
/// (x, y, z) -> (x, y) between flat spaces.
MapPtr euclid_projection();

}  // namespace catalog

enum class EntryKind { Manifold, Frame, Map };

std::string_view entry_kind_name(EntryKind k);

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::Manifold;
  std::string provenance;
  std::variant<ManifoldPtr, FramePtr, MapPtr> payload;
};

/// A submersion together with a frame whose third leg spans its fibers.
struct Pairing {
  std::string map;
  std::string frame;
};

/// Immutable name registry over the catalog constructions.
class Catalog {
 public:
  /// The standard catalog. Built once; safe for concurrent readers.
  static const Catalog& standard();

  /// Copy without the named entry and any pairing that refers to it.
  Catalog without(std::string_view name) const;

  void add(CatalogEntry entry);
  void add_pairing(Pairing p);

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const std::vector<Pairing>& pairings() const noexcept { return pairings_; }
  const CatalogEntry* find(std::string_view name) const noexcept;
  bool contains(std::string_view name) const noexcept { return find(name) != nullptr; }

  /// Typed lookups; throw Error(NotFound) for a missing or differently-typed name.
  ManifoldPtr manifold(std::string_view name) const;
  FramePtr frame(std::string_view name) const;
  MapPtr map(std::string_view name) const;

 private:
  const CatalogEntry& require(std::string_view name, EntryKind kind) const;
  std::vector<CatalogEntry> entries_;
  std::vector<Pairing> pairings_;
};

}  // namespace solgeom
