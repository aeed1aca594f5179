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

#include "solgeom/mapcalc.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "solgeom/error.hpp"

namespace solgeom {

SmoothMap::SmoothMap(std::string name, ManifoldPtr source, ManifoldPtr target, std::vector<Expression> components,
                     ParamMap params)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      components_(std::move(components)),
      params_(std::move(params)) {
  if (!source_ || !target_) throw Error(ErrorKind::InvalidArgument, "map '" + name_ + "': missing manifold");
  if (components_.size() != target_->dim()) {
    throw Error(ErrorKind::InvalidArgument, "map '" + name_ + "': needs one component per target coordinate");
  }
  const auto& coords = source_->coords();
  for (const auto& c : components_) {
    for (const auto& v : c.variables()) {
      if (std::find(coords.begin(), coords.end(), v) == coords.end() && !params_.contains(v)) {
        throw Error(ErrorKind::InvalidArgument,
                    "map '" + name_ + "': component refers to undeclared variable '" + v + "'");
      }
    }
  }
}

std::vector<Jet> SmoothMap::component_jets(std::span<const double> p, int order) const {
  const std::size_t n = source_->dim();
  if (p.size() != n) throw Error(ErrorKind::InvalidArgument, "map '" + name_ + "': point has wrong dimension");
  JetScope scope(n, order);
  scope.bind_params(params_);
  for (std::size_t i = 0; i < n; ++i) scope.bind(source_->coords()[i], Jet::variable(n, order, i, p[i]));
  std::vector<Jet> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(evaluate(c, scope));
  return out;
}

Point SmoothMap::image(std::span<const double> p) const {
  Point q;
  for (const auto& j : component_jets(p, 0)) q.push_back(j.value());
  return q;
}

Eigen::MatrixXd differential(const SmoothMap& phi, std::span<const double> p) {
  const auto jets = phi.component_jets(p, 1);
  const std::size_t n = phi.source().dim();
  Eigen::MatrixXd J(jets.size(), n);
  for (std::size_t g = 0; g < jets.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) J(g, i) = jets[g].d(i);
  return J;
}

double target_norm(const ChartedManifold& target, std::span<const double> q, std::span<const double> v) {
  const Eigen::MatrixXd h = metric_at(target, q);
  const Eigen::Map<const Eigen::VectorXd> x(v.data(), static_cast<Eigen::Index>(v.size()));
  return std::sqrt(std::max(0.0, x.dot(h * x)));
}

SubmersionReport is_riemannian_submersion(const SmoothMap& phi, std::span<const Point> points, double tol) {
  if (phi.source().dim() != phi.target().dim() + 1) {
    throw Error(ErrorKind::InvalidArgument, "submersion check needs a one-dimensional fiber");
  }
  SubmersionReport report;
  const std::size_t m = phi.target().dim();
  for (const auto& p : points) {
    SubmersionSample s;
    s.point = p;
    const Eigen::MatrixXd J = differential(phi, p);
    const Eigen::MatrixXd ginv = inverse_metric_at(phi.source(), p);
    const Eigen::MatrixXd h = metric_at(phi.target(), phi.image(p));
    const Eigen::MatrixXd pushed = J * ginv * J.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
    const auto sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-12 * std::max(1.0, sv(0))) {
      s.full_rank = false;
      s.residual = std::numeric_limits<double>::infinity();
      if (report.failure.empty()) report.failure = "rank-deficient differential at " + format_point(p);
    } else {
      s.residual = (pushed * h - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
      // Kernel direction: for two target components it is the cross product of the rows.
      Eigen::VectorXd v;
      if (J.rows() == 2 && J.cols() == 3) {
        Eigen::Vector3d a = J.row(0).transpose(), b = J.row(1).transpose();
        v = a.cross(b);
      } else {
        v = svd.matrixV().col(J.cols() - 1);
      }
      const Eigen::MatrixXd g = metric_at(phi.source(), p);
      v /= std::sqrt(v.dot(g * v));
      const double scale = v.cwiseAbs().maxCoeff();
      for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (std::abs(v(k)) > 1e-12 * scale) {
          if (v(k) < 0) v = -v;
          break;
        }
      }
      s.vertical.assign(v.data(), v.data() + v.size());
      for (double& x : s.vertical) x += 0.0;  // no negative zeros in reports
    }
    if (!(s.residual <= tol)) {
      report.pass = false;
      if (report.failure.empty() && s.full_rank) {
        report.failure = "horizontal isometry residual " + std::to_string(s.residual) + " at " + format_point(p);
      }
    }
    if (report.worst_point.empty() || !(s.residual <= report.worst_residual)) {
      report.worst_residual = s.residual;
      report.worst_point = p;
    }
    report.samples.push_back(std::move(s));
  }
  return report;
}

namespace {

// Everything needed to assemble tension and bitension at one point, as jets in
// the source variables.
struct MapGeometry {
  std::size_t n = 0, m = 0;
  std::vector<Jet> phi;       // phi^gamma
  std::vector<Jet> dphi;      // d_i phi^gamma at gamma * n + i
  MetricJets source;          // g, g^-1
  std::vector<Jet> gamma;     // source Christoffel symbols
  std::vector<Jet> tgamma;    // target Christoffel symbols composed with phi
  Point image;
};

// `order` is the jet order of the resulting tension components.
MapGeometry map_geometry(const SmoothMap& map, std::span<const double> p, int order) {
  MapGeometry G;
  G.n = map.source().dim();
  G.m = map.target().dim();
  G.phi = map.component_jets(p, order + 2);
  for (const auto& c : G.phi) G.image.push_back(c.value());
  G.dphi.resize(G.m * G.n);
  for (std::size_t g = 0; g < G.m; ++g)
    for (std::size_t i = 0; i < G.n; ++i) G.dphi[g * G.n + i] = G.phi[g].derivative(i);
  G.source = metric_jets(map.source(), p, order);
  G.gamma = christoffel_jets(map.source(), p, order);
  const auto target_gamma = christoffel_jets(map.target(), G.image, order);
  std::vector<Jet> inner;
  for (const auto& c : G.phi) inner.push_back(c.truncated(order));
  for (const auto& t : target_gamma) G.tgamma.push_back(compose(t, inner));
  return G;
}

std::vector<Jet> tension_from(const MapGeometry& G, int order) {
  const std::size_t n = G.n, m = G.m;
  std::vector<Jet> tau(m, Jet(n, order));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Jet hess = G.dphi[c * n + i].derivative(j);
        for (std::size_t k = 0; k < n; ++k) hess -= G.gamma[(k * n + i) * n + j] * G.dphi[c * n + k];
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b)
            hess += G.tgamma[(c * m + a) * m + b] * G.dphi[a * n + i] * G.dphi[b * n + j];
        tau[c] += G.source.ginv[i * n + j] * hess;
      }
    }
  }
  return tau;
}

TensionResult make_result(const SmoothMap& phi, std::span<const double> p, const Point& image,
                          std::vector<double> comps) {
  TensionResult r;
  r.point.assign(p.begin(), p.end());
  r.image = image;
  r.norm = target_norm(phi.target(), image, comps);
  r.components = std::move(comps);
  return r;
}

}  // namespace

std::vector<Jet> tension_jets(const SmoothMap& phi, std::span<const double> p, int order) {
  return tension_from(map_geometry(phi, p, order), order);
}

TensionResult tension(const SmoothMap& phi, std::span<const double> p) {
  const MapGeometry G = map_geometry(phi, p, 0);
  std::vector<double> comps;
  for (const auto& t : tension_from(G, 0)) comps.push_back(t.value());
  return make_result(phi, p, G.image, std::move(comps));
}

TensionResult bitension(const SmoothMap& phi, std::span<const double> p) {
  const MapGeometry G = map_geometry(phi, p, 2);
  const std::size_t n = G.n, m = G.m;
  const std::vector<Jet> tau = tension_from(G, 2);

  // (D_i V)^c = d_i V^c + Gbar^c_ab d_i phi^a V^b
  auto covariant = [&](const std::vector<Jet>& V, std::size_t i) {
    std::vector<Jet> out;
    for (std::size_t c = 0; c < m; ++c) {
      Jet s = V[c].derivative(i);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) s += G.tgamma[(c * m + a) * m + b] * G.dphi[a * n + i] * V[b];
      out.push_back(s);
    }
    return out;
  };

  std::vector<std::vector<Jet>> Dtau(n);
  for (std::size_t i = 0; i < n; ++i) Dtau[i] = covariant(tau, i);

  std::vector<double> rough(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double gij = G.source.ginv[i * n + j].value();
      if (gij == 0.0) continue;
      const auto DiDj = covariant(Dtau[j], i);
      for (std::size_t c = 0; c < m; ++c) {
        double v = DiDj[c].value();
        for (std::size_t k = 0; k < n; ++k) v -= G.gamma[(k * n + i) * n + j].value() * Dtau[k][c].value();
        rough[c] += gij * v;
      }
    }
  }

  // Trace of R^N(d phi, tau) d phi with R(X,Y)Z = R^d_{cab} X^a Y^b Z^c d_d.
  const auto R = riemann_mixed(christoffel_jets(phi.target(), G.image, 1), m);
  std::vector<double> comps(m, 0.0);
  for (std::size_t d = 0; d < m; ++d) {
    double curv = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double gij = G.source.ginv[i * n + j].value();
        if (gij == 0.0) continue;
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
              curv += gij * R[((d * m + c) * m + a) * m + b] * G.dphi[a * n + i].value() * tau[b].value() *
                      G.dphi[c * n + j].value();
            }
      }
    comps[d] = rough[d] - curv;
  }
  return make_result(phi, p, G.image, std::move(comps));
}

}  // namespace solgeom
