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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "solgeom/geometry.hpp"

namespace solgeom {

/// Bracket decomposition of an orthonormal frame {e1, e2, e3} with e3 vertical:
///   [e1,e3] = f3 e2 + k1 e3,  [e2,e3] = -f3 e1 + k2 e3,  [e1,e2] = f1 e1 + f2 e2 - 2 sigma e3.
///
/// The six scalars are read off as c^2_13, c^3_13, c^3_23, c^1_12, c^2_12 and
/// -c^3_12 / 2. A general frame also has c^1_13, c^2_23 and c^1_23 + c^2_13,
/// which this shape forces to zero; they are kept as `defect`.
struct IntegrabilityData {
  Point point;
  int order = 0;
  Jet f1, f2, f3, kappa1, kappa2, sigma;
  std::array<double, 3> defect{};
  /// Coordinate components of e1, e2, e3 (adapted order), one jet order above the data.
  std::array<std::vector<Jet>, 3> legs;

  /// e_{i+1}(s), one order lower than `s`.
  Jet e(std::size_t i, const Jet& s) const { return directional(legs[i], s); }
  double defect_norm() const;
  bool has_bracket_form(double tol = 1e-9) const { return defect_norm() <= tol; }
};

/// Data of `f` in its adapted order, as jets of order `order` (at least 2 for the
/// second-derivative identities).
IntegrabilityData integrability_data(const FrameField& f, std::span<const double> p, int order = 2);

/// Structure coefficients rebuilt from the six scalars (adapted order).
FrameCoefficients reconstruct_brackets(const IntegrabilityData& d);
/// Connection coefficients rebuilt from the six scalars (adapted order).
FrameCoefficients reconstruct_connection(const IntegrabilityData& d);

struct ResidualEntry {
  std::string label;
  Point point;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string note;
};

class ResidualReport {
 public:
  void add(std::string label, std::span<const double> point, double residual, double tolerance,
           std::string note = {});
  void append(const ResidualReport& other);
  const std::vector<ResidualEntry>& entries() const noexcept { return entries_; }
  double worst_residual() const noexcept;
  bool pass() const noexcept;

 private:
  std::vector<ResidualEntry> entries_;
};

/// Label of the entry recording the bracket-shape defect.
inline constexpr const char* kBracketFormLabel = "bracket-form";

/// The three Jacobi-identity consequences for the integrability data, plus a
/// bracket-form entry (the identities assume the decomposition above).
ResidualReport check_jacobi(const FrameField& f, std::span<const double> p, double tol = 1e-8);

/// True if the chart metric and its first two derivatives at `p` match
/// e^{2z}dx^2 + e^{-2z}dy^2 + dz^2.
bool is_sol_chart(const ChartedManifold& m, std::span<const double> p);

/// Rows are e_i (adapted order) in the Sol frame E1 = e^{-z} d_x, E2 = e^{z} d_y, E3 = d_z.
std::vector<Jet> sol_components(const FrameField& f, std::span<const double> p, int order);

/// The seven curvature lines, each comparing the frame curvature with the data
/// expression and with the frame-component expression.
ResidualReport check_curvature_identities(const FrameField& f, std::span<const double> p, double tol = 1e-7);

/// The twelve frame-derivative relations for frames with e1 = a12 E2 + a13 E3.
/// Preconditions (Error(Precondition)): a11 = 0 and f1 = 0 within 1e-10 and a
/// right-handed frame.
ResidualReport check_thb2(const FrameField& f, std::span<const double> p, double tol = 1e-8);

struct BaseCurvature {
  /// e1(f2) - e2(f1) - f1^2 - f2^2 + 2 f3 sigma.
  double value = 0.0;
  /// Same without the f3 term.
  double adapted_value = 0.0;
  /// e3 applied to the full expression.
  double fiber_derivative = 0.0;
};

BaseCurvature gauss_curvature_base(const IntegrabilityData& d);

/// max(|k1|, |k2|) < 1e-9 at every sample.
bool is_harmonic(std::span<const IntegrabilityData> samples);

/// Left-hand sides of the biharmonic system for an adapted frame, with the
/// frame Laplacian over all three legs. Throws Error(Precondition) unless f3 = 0
/// and the bracket form holds.
std::array<double, 2> biharmonic_residual(const IntegrabilityData& d, double base_curvature);
std::array<double, 2> biharmonic_residual(const IntegrabilityData& d);

}  // namespace solgeom
