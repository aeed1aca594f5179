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

#include "solgeom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "solgeom/error.hpp"

namespace solgeom {

std::string format_point(std::span<const double> p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  os << ')';
  return os.str();
}

ChartedManifold::ChartedManifold(std::string name, std::vector<std::string> coords,
                                 const std::vector<std::vector<Expression>>& metric_upper)
    : name_(std::move(name)), coords_(std::move(coords)) {
  const std::size_t n = coords_.size();
  if (n != 2 && n != 3) throw Error(ErrorKind::InvalidArgument, "manifold '" + name_ + "': dimension must be 2 or 3");
  if (metric_upper.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "manifold '" + name_ + "': metric needs one row per coordinate");
  }
  metric_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (metric_upper[i].size() != n - i) {
      throw Error(ErrorKind::InvalidArgument,
                  "manifold '" + name_ + "': metric row " + std::to_string(i) + " must hold " +
                      std::to_string(n - i) + " upper-triangle entries");
    }
    for (std::size_t j = i; j < n; ++j) {
      metric_[i * n + j] = metric_upper[i][j - i];
      metric_[j * n + i] = metric_upper[i][j - i];
    }
  }
  for (const auto& e : metric_) {
    for (const auto& v : e.variables()) {
      if (std::find(coords_.begin(), coords_.end(), v) == coords_.end()) {
        throw Error(ErrorKind::InvalidArgument,
                    "manifold '" + name_ + "': metric refers to undeclared variable '" + v + "'");
      }
    }
  }
}

std::vector<Jet> ChartedManifold::metric_jets(std::span<const double> p, int order) const {
  const std::size_t n = dim();
  if (p.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "manifold '" + name_ + "': point has wrong dimension");
  }
  JetScope scope(n, order);
  for (std::size_t i = 0; i < n; ++i) scope.bind(coords_[i], Jet::variable(n, order, i, p[i]));
  std::vector<Jet> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i * n + j] = evaluate(metric_[i * n + j], scope);
      g[j * n + i] = g[i * n + j];
    }
  }
  // Leading principal minors.
  Eigen::MatrixXd v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v(i, j) = g[i * n + j].value();
  for (std::size_t k = 1; k <= n; ++k) {
    const double minor = v.topLeftCorner(k, k).determinant();
    if (!(minor > 0.0)) {
      throw Error(ErrorKind::Geometry, "manifold '" + name_ + "': metric is not positive definite at " +
                                           format_point(p) + " (leading minor " + std::to_string(k) + " = " +
                                           std::to_string(minor) + ")");
    }
  }
  return g;
}

std::vector<Jet> invert_jet_matrix(const std::vector<Jet>& a, std::size_t n) {
  std::vector<Jet> m = a;
  const std::size_t nv = a.front().nvars();
  const int order = a.front().order();
  std::vector<Jet> inv(n * n, Jet(nv, order));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = Jet::constant(nv, order, 1.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col].value()) > std::abs(m[piv * n + col].value())) piv = r;
    }
    if (m[piv * n + col].value() == 0.0) throw Error(ErrorKind::Geometry, "singular metric");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m[piv * n + c], m[col * n + c]);
        std::swap(inv[piv * n + c], inv[col * n + c]);
      }
    }
    const Jet r = reciprocal(m[col * n + col]);
    for (std::size_t c = 0; c < n; ++c) {
      m[col * n + c] = m[col * n + c] * r;
      inv[col * n + c] = inv[col * n + c] * r;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const Jet factor = m[row * n + col];
      if (factor.value() == 0.0 && factor.is_constant()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        m[row * n + c] -= factor * m[col * n + c];
        inv[row * n + c] -= factor * inv[col * n + c];
      }
    }
  }
  return inv;
}

MetricJets metric_jets(const ChartedManifold& m, std::span<const double> p, int order) {
  MetricJets out;
  out.dim = m.dim();
  out.g = m.metric_jets(p, order);
  out.ginv = invert_jet_matrix(out.g, out.dim);
  return out;
}

std::vector<Jet> christoffel_jets(const ChartedManifold& m, std::span<const double> p, int order) {
  const std::size_t n = m.dim();
  const MetricJets mj = metric_jets(m, p, order + 1);
  // dg[(l * n + i) * n + j] = d_l g_ij
  std::vector<Jet> dg(n * n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n * n; ++i) dg[l * n * n + i] = mj.g[i].derivative(l);
  auto d = [&](std::size_t l, std::size_t i, std::size_t j) -> const Jet& { return dg[(l * n + i) * n + j]; };

  std::vector<Jet> gamma(n * n * n, Jet(n, order));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // Christoffel symbols of the first kind, Gamma_lij.
      std::vector<Jet> first(n);
      for (std::size_t l = 0; l < n; ++l) first[l] = 0.5 * (d(i, l, j) + d(j, l, i) - d(l, i, j));
      for (std::size_t k = 0; k < n; ++k) {
        Jet s(n, order);
        for (std::size_t l = 0; l < n; ++l) s += mj.ginv[k * n + l] * first[l];
        gamma[(k * n + i) * n + j] = s;
        gamma[(k * n + j) * n + i] = s;
      }
    }
  }
  return gamma;
}

std::vector<double> riemann_mixed(const std::vector<Jet>& gamma, std::size_t n) {
  auto G = [&](std::size_t k, std::size_t i, std::size_t j) -> const Jet& { return gamma[(k * n + i) * n + j]; };
  std::vector<double> r(n * n * n * n, 0.0);
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          double v = G(d, b, c).d(a) - G(d, a, c).d(b);
          for (std::size_t e = 0; e < n; ++e) {
            v += G(d, a, e).value() * G(e, b, c).value() - G(d, b, e).value() * G(e, a, c).value();
          }
          r[((d * n + c) * n + a) * n + b] = v;
        }
  return r;
}

Eigen::MatrixXd metric_at(const ChartedManifold& m, std::span<const double> p) {
  const auto g = m.metric_jets(p, 0);
  const std::size_t n = m.dim();
  Eigen::MatrixXd out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = g[i * n + j].value();
  return out;
}

Eigen::MatrixXd inverse_metric_at(const ChartedManifold& m, std::span<const double> p) {
  const Eigen::MatrixXd g = metric_at(m, p);
  Eigen::MatrixXd inv = g.llt().solve(Eigen::MatrixXd::Identity(g.rows(), g.cols()));
  return 0.5 * (inv + inv.transpose());
}

Christoffel christoffel(const ChartedManifold& m, std::span<const double> p) {
  const auto jets = christoffel_jets(m, p, 0);
  Christoffel out;
  out.dim = m.dim();
  out.data.reserve(jets.size());
  for (const auto& j : jets) out.data.push_back(j.value());
  return out;
}

CurvatureTensor riemann_lowered(const ChartedManifold& m, std::span<const double> p) {
  const std::size_t n = m.dim();
  const auto mixed = riemann_mixed(christoffel_jets(m, p, 1), n);
  const Eigen::MatrixXd g = metric_at(m, p);
  CurvatureTensor out;
  out.dim = n;
  out.data.assign(n * n * n * n, 0.0);
  // R_ijkl = g(R(d_k, d_l) d_j, d_i) = g_id R^d_{jkl}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          double v = 0.0;
          for (std::size_t d = 0; d < n; ++d) v += g(i, d) * mixed[((d * n + j) * n + k) * n + l];
          out.at(i, j, k, l) = v;
        }
  return out;
}

Eigen::MatrixXd ricci(const ChartedManifold& m, std::span<const double> p) {
  const std::size_t n = m.dim();
  const CurvatureTensor r = riemann_lowered(m, p);
  const Eigen::MatrixXd ginv = inverse_metric_at(m, p);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(a, b) += ginv(i, j) * r(b, i, a, j);
  return out;
}

double gauss_curvature(const ChartedManifold& m, std::span<const double> p) {
  if (m.dim() != 2) {
    throw Error(ErrorKind::InvalidArgument, "gauss_curvature: manifold '" + m.name() + "' is not 2-dimensional");
  }
  const CurvatureTensor r = riemann_lowered(m, p);
  return r(0, 1, 0, 1) / metric_at(m, p).determinant();
}

FrameField::FrameField(std::string name, ManifoldPtr manifold, std::array<std::vector<Expression>, 3> legs,
                       std::size_t vertical)
    : name_(std::move(name)), manifold_(std::move(manifold)), legs_(std::move(legs)), vertical_(vertical) {
  if (!manifold_ || manifold_->dim() != 3) {
    throw Error(ErrorKind::InvalidArgument, "frame '" + name_ + "': frames live on 3-manifolds");
  }
  if (vertical_ > 2) throw Error(ErrorKind::InvalidArgument, "frame '" + name_ + "': vertical index out of range");
  const auto& coords = manifold_->coords();
  for (const auto& leg : legs_) {
    if (leg.size() != 3) {
      throw Error(ErrorKind::InvalidArgument, "frame '" + name_ + "': each vector needs 3 components");
    }
    for (const auto& c : leg) {
      for (const auto& v : c.variables()) {
        if (std::find(coords.begin(), coords.end(), v) == coords.end()) {
          throw Error(ErrorKind::InvalidArgument,
                      "frame '" + name_ + "': component refers to undeclared variable '" + v + "'");
        }
      }
    }
  }
}

FrameField FrameField::adapted() const {
  return FrameField(name_, manifold_, {legs_[adapted_index(0)], legs_[adapted_index(1)], legs_[adapted_index(2)]},
                    2);
}

namespace {

double orthonormality_of(const std::array<std::vector<Jet>, 3>& e, const std::vector<Jet>& g) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) s += g[a * 3 + b].value() * e[i][a].value() * e[j][b].value();
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

std::array<std::vector<Jet>, 3> raw_leg_jets(const FrameField& f, std::span<const double> p, int order) {
  const auto& m = f.manifold();
  if (p.size() != 3) throw Error(ErrorKind::InvalidArgument, "frame '" + f.name() + "': point has wrong dimension");
  JetScope scope(3, order);
  for (std::size_t i = 0; i < 3; ++i) scope.bind(m.coords()[i], Jet::variable(3, order, i, p[i]));
  std::array<std::vector<Jet>, 3> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& c : f.leg(i)) out[i].push_back(evaluate(c, scope));
  return out;
}

}  // namespace

double FrameField::orthonormality_residual(std::span<const double> p) const {
  return orthonormality_of(raw_leg_jets(*this, p, 0), manifold_->metric_jets(p, 0));
}

std::array<std::vector<Jet>, 3> FrameField::leg_jets(std::span<const double> p, int order) const {
  auto e = raw_leg_jets(*this, p, order);
  const double r = orthonormality_of(e, manifold_->metric_jets(p, 0));
  if (r > 1e-10) {
    throw Error(ErrorKind::Geometry, "frame '" + name_ + "' is not orthonormal at " + format_point(p) +
                                         " (residual " + std::to_string(r) + ")");
  }
  return e;
}

Jet directional(std::span<const Jet> v, const Jet& s) {
  if (s.order() == 0) throw Error(ErrorKind::InvalidArgument, "directional derivative of an order-0 jet");
  Jet out(s.nvars(), s.order() - 1);
  for (std::size_t a = 0; a < v.size(); ++a) out += v[a] * s.derivative(a);
  return out;
}

std::vector<Jet> bracket_jets(const FrameField& f, std::span<const double> p, int order) {
  const auto e = f.leg_jets(p, order + 1);
  const auto g = f.manifold().metric_jets(p, order);
  std::vector<Jet> c(27, Jet(3, order));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      // [e_i, e_j]^a = e_i(e_j^a) - e_j(e_i^a)
      std::array<Jet, 3> br;
      for (std::size_t a = 0; a < 3; ++a) br[a] = directional(e[i], e[j][a]) - directional(e[j], e[i][a]);
      for (std::size_t k = 0; k < 3; ++k) {
        Jet s(3, order);
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t b = 0; b < 3; ++b) s += g[a * 3 + b] * br[a] * e[k][b];
        c[(k * 3 + i) * 3 + j] = s;
        c[(k * 3 + j) * 3 + i] = -s;
      }
    }
  }
  return c;
}

FrameCoefficients frame_bracket(const FrameField& f, std::span<const double> p) {
  const auto jets = bracket_jets(f, p, 0);
  FrameCoefficients out;
  for (std::size_t i = 0; i < 27; ++i) out.data[i] = jets[i].value();
  return out;
}

FrameCoefficients connection_from_brackets(const FrameCoefficients& c) {
  FrameCoefficients w;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) w.at(k, i, j) = 0.5 * (c(k, i, j) - c(i, j, k) + c(j, k, i));
  return w;
}

FrameCoefficients frame_connection(const FrameField& f, std::span<const double> p) {
  return connection_from_brackets(frame_bracket(f, p));
}

Eigen::Matrix3d frame_components(const FrameField& f, const FrameField& reference, std::span<const double> p) {
  if (&f.manifold() != &reference.manifold() && f.manifold().coords() != reference.manifold().coords()) {
    throw Error(ErrorKind::InvalidArgument, "frame_components: frames live on different charts");
  }
  const auto e = f.leg_jets(p, 0);
  const auto E = reference.leg_jets(p, 0);
  const Eigen::MatrixXd g = metric_at(f.manifold(), p);
  Eigen::Matrix3d a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t v = 0; v < 3; ++v) s += g(u, v) * e[i][u].value() * E[j][v].value();
      a(i, j) = s;
    }
  return a;
}

CurvatureTensor frame_curvature(const FrameField& f, std::span<const double> p) {
  const CurvatureTensor r = riemann_lowered(f.manifold(), p);
  const auto jets = f.leg_jets(p, 0);
  Eigen::Matrix3d e;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < 3; ++a) e(i, a) = jets[i][a].value();
  CurvatureTensor out;
  out.dim = 3;
  out.data.assign(81, 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          double s = 0.0;
          for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
              for (std::size_t c = 0; c < 3; ++c)
                for (std::size_t d = 0; d < 3; ++d) s += r(a, b, c, d) * e(i, a) * e(j, b) * e(k, c) * e(l, d);
          out.at(i, j, k, l) = s;
        }
  return out;
}

}  // namespace solgeom
