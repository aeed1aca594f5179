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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "solgeom/expr.hpp"
#include "solgeom/jet.hpp"

namespace solgeom {

using Point = std::vector<double>;

std::string format_point(std::span<const double> p);

/// A coordinate chart with a Riemannian metric given by closed-form entries.
class ChartedManifold {
 public:
  /// `metric_upper[i]` lists g_ii, g_i(i+1), ..., g_i(dim-1); the lower triangle
  /// shares the same expressions.
  ChartedManifold(std::string name, std::vector<std::string> coords,
                  const std::vector<std::vector<Expression>>& metric_upper);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<std::string>& coords() const noexcept { return coords_; }
  const Expression& metric(std::size_t i, std::size_t j) const { return metric_[i * dim() + j]; }

  /// Jets of g_ij (row-major, dim*dim) in the chart variables. Throws
  /// Error(Geometry) if g is not positive definite at `p`.
  std::vector<Jet> metric_jets(std::span<const double> p, int order) const;

 private:
  std::string name_;
  std::vector<std::string> coords_;
  std::vector<Expression> metric_;
};

using ManifoldPtr = std::shared_ptr<const ChartedManifold>;

/// Metric and inverse metric as jets, row-major.
struct MetricJets {
  std::size_t dim = 0;
  std::vector<Jet> g;
  std::vector<Jet> ginv;
};

MetricJets metric_jets(const ChartedManifold& m, std::span<const double> p, int order);
/// Inverse of a symmetric matrix of jets by Gauss-Jordan elimination with partial pivoting on values.
std::vector<Jet> invert_jet_matrix(const std::vector<Jet>& a, std::size_t n);

/// Christoffel symbols as jets of order `order`; entry (k, i, j) at (k * dim + i) * dim + j.
std::vector<Jet> christoffel_jets(const ChartedManifold& m, std::span<const double> p, int order);

/// Mixed Riemann components R^d_{cab} (R(d_a, d_b) d_c = R^d_{cab} d_d) from Christoffel jets of
/// order >= 1; entry at ((d * n + c) * n + a) * n + b.
std::vector<double> riemann_mixed(const std::vector<Jet>& gamma, std::size_t n);

Eigen::MatrixXd metric_at(const ChartedManifold& m, std::span<const double> p);
Eigen::MatrixXd inverse_metric_at(const ChartedManifold& m, std::span<const double> p);

struct Christoffel {
  std::size_t dim = 0;
  std::vector<double> data;
  double operator()(std::size_t k, std::size_t i, std::size_t j) const { return data[(k * dim + i) * dim + j]; }
};

Christoffel christoffel(const ChartedManifold& m, std::span<const double> p);

/// Fully lowered curvature, R(X,Y,Z,W) = g(R(Z,W)Y, X) with R(X,Y) = [D_X, D_Y] - D_[X,Y].
struct CurvatureTensor {
  std::size_t dim = 0;
  std::vector<double> data;
  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data[((i * dim + j) * dim + k) * dim + l];
  }
  double& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data[((i * dim + j) * dim + k) * dim + l];
  }
};

CurvatureTensor riemann_lowered(const ChartedManifold& m, std::span<const double> p);
/// Ric(X,Y) = sum_i R(Y, e_i, X, e_i).
Eigen::MatrixXd ricci(const ChartedManifold& m, std::span<const double> p);
double gauss_curvature(const ChartedManifold& m, std::span<const double> p);

/// Three vector fields on a 3-manifold with one leg marked vertical.
///
/// Legs keep their declared order for bracket, connection and curvature
/// queries. The adapted order used by the integrability data puts the
/// vertical leg last and the other two in cyclic order after it.
class FrameField {
 public:
  FrameField(std::string name, ManifoldPtr manifold, std::array<std::vector<Expression>, 3> legs,
             std::size_t vertical);

  const std::string& name() const noexcept { return name_; }
  const ChartedManifold& manifold() const noexcept { return *manifold_; }
  const ManifoldPtr& manifold_ptr() const noexcept { return manifold_; }
  const std::vector<Expression>& leg(std::size_t i) const { return legs_[i]; }
  std::size_t vertical() const noexcept { return vertical_; }
  /// Declared index of the adapted leg e_{i+1}.
  std::size_t adapted_index(std::size_t i) const noexcept { return (vertical_ + 1 + i) % 3; }
  FrameField adapted() const;

  /// Coordinate components of each leg as jets; validates orthonormality at `p`
  /// (Error(Geometry) beyond 1e-10).
  std::array<std::vector<Jet>, 3> leg_jets(std::span<const double> p, int order) const;
  /// max |g(e_i, e_j) - delta_ij| at p.
  double orthonormality_residual(std::span<const double> p) const;

 private:
  std::string name_;
  ManifoldPtr manifold_;
  std::array<std::vector<Expression>, 3> legs_;
  std::size_t vertical_;
};

using FramePtr = std::shared_ptr<const FrameField>;

/// Structure coefficients c^k_ij: [e_i, e_j] = c^k_ij e_k, entry (k, i, j).
struct FrameCoefficients {
  std::array<double, 27> data{};
  double operator()(std::size_t k, std::size_t i, std::size_t j) const { return data[(k * 3 + i) * 3 + j]; }
  double& at(std::size_t k, std::size_t i, std::size_t j) { return data[(k * 3 + i) * 3 + j]; }
};

/// Frame derivative of a scalar jet: sum_a v^a d_a s, one order lower.
Jet directional(std::span<const Jet> v, const Jet& s);

/// Structure coefficients as jets of order `order`, entry (k, i, j).
std::vector<Jet> bracket_jets(const FrameField& f, std::span<const double> p, int order);

FrameCoefficients frame_bracket(const FrameField& f, std::span<const double> p);
/// omega^k_ij with D_{e_i} e_j = omega^k_ij e_k, entry (k, i, j).
FrameCoefficients frame_connection(const FrameField& f, std::span<const double> p);
FrameCoefficients connection_from_brackets(const FrameCoefficients& c);
/// Rows are the legs of `f` expanded in `reference`: a_i^j = g(e_i, E_j).
Eigen::Matrix3d frame_components(const FrameField& f, const FrameField& reference, std::span<const double> p);
/// R(e_i, e_j, e_k, e_l) for the legs of `f`.
CurvatureTensor frame_curvature(const FrameField& f, std::span<const double> p);

}  // namespace solgeom
