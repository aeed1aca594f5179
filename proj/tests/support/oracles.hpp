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

// Independent reference computations for tests. Nothing here uses jets beyond
// plain value evaluation; derivatives come from Richardson-extrapolated
// central differences.

#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "solgeom/expr.hpp"
#include "solgeom/geometry.hpp"
#include "solgeom/mapcalc.hpp"
#include "solgeom/sampling.hpp"

namespace oracle {

using solgeom::Expression;
using solgeom::Point;
using Field = std::function<double(const Point&)>;

/// Random expressions that are finite and smooth on [-2,2]^n: divisors,
/// logarithms and roots are always applied to arguments bounded away from 0.
class ExprGen {
 public:
  ExprGen(std::uint64_t seed, std::vector<std::string> vars) : rng_(seed), vars_(std::move(vars)) {}

  Expression operator()(int depth = 4) { return node(depth); }

 private:
  double uniform(double lo, double hi) { return rng_.uniform(lo, hi); }
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_.next() % n); }

  Expression leaf() {
    if (pick(3) == 0) return Expression::number(std::round(uniform(-2, 2) * 8) / 8);
    return Expression::variable(vars_[pick(vars_.size())]);
  }

  // Bounded in [-1, 1] whatever the argument.
  Expression squash(Expression e) { return solgeom::sin(std::move(e)); }

  Expression node(int depth) {
    if (depth <= 0) return leaf();
    const auto one = Expression::number(1.0);
    switch (pick(11)) {
      case 0:
        return node(depth - 1) + node(depth - 1);
      case 1:
        return node(depth - 1) - node(depth - 1);
      case 2:
        return node(depth - 1) * node(depth - 1);
      case 3: {
        auto d = node(depth - 1);
        return node(depth - 1) / (Expression::number(1.5) + squash(d));
      }
      case 4:
        return solgeom::exp(squash(node(depth - 1)));
      case 5: {
        auto u = node(depth - 1);
        return solgeom::log(one + u * u);
      }
      case 6: {
        auto u = squash(node(depth - 1));
        return solgeom::sqrt(Expression::number(2.0) + u);
      }
      case 7:
        return solgeom::sin(node(depth - 1));
      case 8:
        return solgeom::cos(node(depth - 1));
      case 9:
        return pow(squash(node(depth - 1)), Expression::number(static_cast<double>(2 + pick(2))));
      default:
        return -node(depth - 1);
    }
  }

  solgeom::SplitMix64 rng_;
  std::vector<std::string> vars_;
};

inline Field field_of(const Expression& e, std::vector<std::string> vars, solgeom::ParamMap params = {}) {
  return [e, vars = std::move(vars), params = std::move(params)](const Point& p) {
    return solgeom::eval_value(e, vars, p, params);
  };
}

inline Point shifted(Point p, std::size_t i, double h) {
  p[i] += h;
  return p;
}

/// d f / d x_i by Richardson extrapolation of central differences.
inline double d1(const Field& f, const Point& p, std::size_t i, double h = 1e-3) {
  auto central = [&](double s) { return (f(shifted(p, i, s)) - f(shifted(p, i, -s))) / (2 * s); };
  return (4 * central(h / 2) - central(h)) / 3;
}

/// d^2 f / d x_i d x_j by Richardson extrapolation of the four-point stencil.
inline double d2(const Field& f, const Point& p, std::size_t i, std::size_t j, double h = 2e-3) {
  auto stencil = [&](double s) {
    if (i == j) return (f(shifted(p, i, s)) - 2 * f(p) + f(shifted(p, i, -s))) / (s * s);
    auto at = [&](double a, double b) { return f(shifted(shifted(p, i, a), j, b)); };
    return (at(s, s) - at(s, -s) - at(-s, s) + at(-s, -s)) / (4 * s * s);
  };
  return (4 * stencil(h / 2) - stencil(h)) / 3;
}

/// Christoffel symbols of the second kind from differenced metric values, (k*n+i)*n+j.
inline std::vector<double> christoffel(const solgeom::ChartedManifold& m, const Point& p) {
  const std::size_t n = m.dim();
  Eigen::MatrixXd g(n, n);
  std::vector<double> dg(n * n * n);  // dg[(l*n+i)*n+j] = d_l g_ij
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Field f = field_of(m.metric(i, j), m.coords());
      g(i, j) = f(p);
      for (std::size_t l = 0; l < n; ++l) dg[(l * n + i) * n + j] = d1(f, p, l);
    }
  const Eigen::MatrixXd gi = g.inverse();
  std::vector<double> out(n * n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t l = 0; l < n; ++l)
          s += gi(k, l) * (dg[(i * n + l) * n + j] + dg[(j * n + l) * n + i] - dg[(l * n + i) * n + j]);
        out[(k * n + i) * n + j] = 0.5 * s;
      }
  return out;
}

/// Tension field in target coordinates from differenced map components and metrics.
inline std::vector<double> tension(const solgeom::SmoothMap& phi, const Point& p) {
  const auto& M = phi.source();
  const auto& N = phi.target();
  const std::size_t m = M.dim(), n = N.dim();
  std::vector<Field> comp;
  for (const auto& c : phi.components()) comp.push_back(field_of(c, M.coords(), phi.params()));
  Point q(n);
  for (std::size_t a = 0; a < n; ++a) q[a] = comp[a](p);
  const auto G = christoffel(M, p);
  const auto Gb = christoffel(N, q);
  Eigen::MatrixXd g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = field_of(M.metric(i, j), M.coords())(p);
  const Eigen::MatrixXd gi = g.inverse();
  Eigen::MatrixXd J(n, m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < m; ++i) J(a, i) = d1(comp[a], p, i);
  std::vector<double> tau(n, 0.0);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        double t = d2(comp[c], p, i, j);
        for (std::size_t k = 0; k < m; ++k) t -= G[(k * m + i) * m + j] * J(c, k);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) t += Gb[(c * n + a) * n + b] * J(a, i) * J(b, j);
        tau[c] += gi(i, j) * t;
      }
  return tau;
}

/// Laplace-Beltrami operator of Sol on a scalar field: the contracted
/// Christoffel terms vanish, leaving e^{-2z} f_xx + e^{2z} f_yy + f_zz.
inline double sol_laplacian(const Field& f, const Point& p) {
  const double z = p[2];
  return std::exp(-2 * z) * d2(f, p, 0, 0) + std::exp(2 * z) * d2(f, p, 1, 1) + d2(f, p, 2, 2);
}

/// L1 residual of the harmonic constraint subsystem, written out independently.
inline double rch_l1(double s, double a1, double a2, double a3, bool control = false) {
  const double c = control ? -1.0 : 1.0;
  return std::abs(s * s - 2 * a2 * a2 + c) + std::abs(s * s - 2 * a1 * a1 + c) + std::abs(2 * a1 * a2) +
         std::abs(a1 * a1 + a2 * a2 + a3 * a3 - 1);
}

struct GridMin {
  double value = 0.0;
  double s = 0, a1 = 0, a2 = 0, a3 = 0;
};

/// Exhaustive grid over [0, 1.5]^4; the residual is even in every variable so
/// this covers [-1.5, 1.5]^4.
inline GridMin rch_grid(double h) {
  GridMin best{1e300};
  const int n = static_cast<int>(std::lround(1.5 / h));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
          const double v = rch_l1(i * h, j * h, k * h, l * h);
          if (v < best.value) best = {v, i * h, j * h, k * h, l * h};
        }
  return best;
}

}  // namespace oracle
