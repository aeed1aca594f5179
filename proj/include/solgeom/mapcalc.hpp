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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "solgeom/geometry.hpp"

namespace solgeom {

/// A map between charts, given by target-coordinate expressions in the source coordinates.
class SmoothMap {
 public:
  SmoothMap(std::string name, ManifoldPtr source, ManifoldPtr target, std::vector<Expression> components,
            ParamMap params = {});

  const std::string& name() const noexcept { return name_; }
  const ChartedManifold& source() const noexcept { return *source_; }
  const ChartedManifold& target() const noexcept { return *target_; }
  const ManifoldPtr& source_ptr() const noexcept { return source_; }
  const ManifoldPtr& target_ptr() const noexcept { return target_; }
  const std::vector<Expression>& components() const noexcept { return components_; }
  const ParamMap& params() const noexcept { return params_; }

  std::vector<Jet> component_jets(std::span<const double> p, int order) const;
  Point image(std::span<const double> p) const;

 private:
  std::string name_;
  ManifoldPtr source_, target_;
  std::vector<Expression> components_;
  ParamMap params_;
};

using MapPtr = std::shared_ptr<const SmoothMap>;

/// Entry (gamma, i) = d phi^gamma / d x^i.
Eigen::MatrixXd differential(const SmoothMap& phi, std::span<const double> p);

struct SubmersionSample {
  Point point;
  double residual = 0.0;
  bool full_rank = true;
  /// Unit vertical vector in source coordinates; first nonzero component positive.
  Point vertical;
};

struct SubmersionReport {
  bool pass = true;
  double worst_residual = 0.0;
  Point worst_point;
  std::vector<SubmersionSample> samples;
  std::string failure;
};

/// Checks that d phi is an isometry on the horizontal space: max |J g^-1 J^T h - I| <= tol
/// at every sample. Requires source.dim = target.dim + 1.
SubmersionReport is_riemannian_submersion(const SmoothMap& phi, std::span<const Point> points, double tol);

struct TensionResult {
  Point point;
  Point image;
  /// Components in target coordinates.
  std::vector<double> components;
  /// sqrt(h(v, v)) at the image point.
  double norm = 0.0;
};

/// Tension field components as jets of order `order` in the source variables.
std::vector<Jet> tension_jets(const SmoothMap& phi, std::span<const double> p, int order);
TensionResult tension(const SmoothMap& phi, std::span<const double> p);
TensionResult bitension(const SmoothMap& phi, std::span<const double> p);

/// sqrt(h(v, v)) with h the target metric at `q`.
double target_norm(const ChartedManifold& target, std::span<const double> q, std::span<const double> v);

}  // namespace solgeom
