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

#include "solgeom/submersion.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "solgeom/error.hpp"

namespace solgeom {

double IntegrabilityData::defect_norm() const {
  return std::max({std::abs(defect[0]), std::abs(defect[1]), std::abs(defect[2])});
}

IntegrabilityData integrability_data(const FrameField& f, std::span<const double> p, int order) {
  if (order < 0 || order + 1 > kMaxJetOrder) {
    throw Error(ErrorKind::InvalidArgument, "integrability_data: order must lie in [0, 3]");
  }
  const FrameField a = f.adapted();
  const auto c = bracket_jets(a, p, order);
  auto C = [&](std::size_t k, std::size_t i, std::size_t j) -> const Jet& { return c[(k * 3 + i) * 3 + j]; };
  IntegrabilityData d;
  d.point.assign(p.begin(), p.end());
  d.order = order;
  d.f1 = C(0, 0, 1);
  d.f2 = C(1, 0, 1);
  d.sigma = -0.5 * C(2, 0, 1);
  d.f3 = C(1, 0, 2);
  d.kappa1 = C(2, 0, 2);
  d.kappa2 = C(2, 1, 2);
  d.defect = {C(0, 0, 2).value(), C(1, 1, 2).value(), C(0, 1, 2).value() + d.f3.value()};
  d.legs = a.leg_jets(p, order + 1);
  return d;
}

FrameCoefficients reconstruct_brackets(const IntegrabilityData& d) {
  FrameCoefficients c;
  auto set = [&](std::size_t k, std::size_t i, std::size_t j, double v) {
    c.at(k, i, j) = v;
    c.at(k, j, i) = -v;
  };
  set(1, 0, 2, d.f3.value());
  set(2, 0, 2, d.kappa1.value());
  set(0, 1, 2, -d.f3.value());
  set(2, 1, 2, d.kappa2.value());
  set(0, 0, 1, d.f1.value());
  set(1, 0, 1, d.f2.value());
  set(2, 0, 1, -2.0 * d.sigma.value());
  return c;
}

FrameCoefficients reconstruct_connection(const IntegrabilityData& d) {
  const double f1 = d.f1.value(), f2 = d.f2.value(), f3 = d.f3.value();
  const double k1 = d.kappa1.value(), k2 = d.kappa2.value(), s = d.sigma.value();
  FrameCoefficients w;
  // w.at(k, i, j): component along e_k of D_{e_i} e_j.
  w.at(1, 0, 0) = -f1;
  w.at(0, 0, 1) = f1;
  w.at(2, 0, 1) = -s;
  w.at(1, 0, 2) = s;
  w.at(1, 1, 0) = -f2;
  w.at(2, 1, 0) = s;
  w.at(0, 1, 1) = f2;
  w.at(0, 1, 2) = -s;
  w.at(2, 2, 0) = -k1;
  w.at(1, 2, 0) = s - f3;
  w.at(0, 2, 1) = -(s - f3);
  w.at(2, 2, 1) = -k2;
  w.at(0, 2, 2) = k1;
  w.at(1, 2, 2) = k2;
  return w;
}

void ResidualReport::add(std::string label, std::span<const double> point, double residual, double tolerance,
                         std::string note) {
  ResidualEntry e;
  e.label = std::move(label);
  e.point.assign(point.begin(), point.end());
  e.residual = residual;
  e.tolerance = tolerance;
  e.pass = std::abs(residual) <= tolerance;
  e.note = std::move(note);
  entries_.push_back(std::move(e));
}

void ResidualReport::append(const ResidualReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

double ResidualReport::worst_residual() const noexcept {
  double w = 0.0;
  for (const auto& e : entries_) {
    if (!(std::abs(e.residual) <= w)) w = std::abs(e.residual);
  }
  return w;
}

bool ResidualReport::pass() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const ResidualEntry& e) { return e.pass; });
}

namespace {

void add_bracket_form(ResidualReport& r, const IntegrabilityData& d) {
  r.add(kBracketFormLabel, d.point, d.defect_norm(), 1e-9,
        d.has_bracket_form() ? std::string() : "frame brackets do not have the assumed shape");
}

}  // namespace

ResidualReport check_jacobi(const FrameField& f, std::span<const double> p, double tol) {
  const IntegrabilityData d = integrability_data(f, p, 1);
  const double f1 = d.f1.value(), f2 = d.f2.value(), f3 = d.f3.value();
  const double k1 = d.kappa1.value(), k2 = d.kappa2.value();
  ResidualReport r;
  r.add("jacobi/1", p, d.e(2, d.f1).value() + (k1 + f2) * f3 - d.e(0, d.f3).value(), tol);
  r.add("jacobi/2", p, d.e(2, d.f2).value() + (k2 - f1) * f3 - d.e(1, d.f3).value(), tol);
  r.add("jacobi/3", p,
        2.0 * d.e(2, d.sigma).value() + k1 * f1 + k2 * f2 + d.e(1, d.kappa1).value() - d.e(0, d.kappa2).value(),
        tol);
  add_bracket_form(r, d);
  return r;
}

namespace {

// Sol metric jets in the chart variables of `m`, z being the third coordinate.
std::vector<Jet> sol_metric_jets(std::span<const double> p, int order) {
  const Jet z = Jet::variable(3, order, 2, p[2]);
  std::vector<Jet> g(9, Jet(3, order));
  g[0] = exp(2.0 * z);
  g[4] = exp(-2.0 * z);
  g[8] = Jet::constant(3, order, 1.0);
  return g;
}

}  // namespace

bool is_sol_chart(const ChartedManifold& m, std::span<const double> p) {
  if (m.dim() != 3 || p.size() != 3) return false;
  const auto g = m.metric_jets(p, 2);
  const auto s = sol_metric_jets(p, 2);
  for (std::size_t i = 0; i < 9; ++i) {
    const auto a = g[i].coefficients();
    const auto b = s[i].coefficients();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (std::abs(a[k] - b[k]) > 1e-12 * (1.0 + std::abs(b[k]))) return false;
    }
  }
  return true;
}

std::vector<Jet> sol_components(const FrameField& f, std::span<const double> p, int order) {
  if (!is_sol_chart(f.manifold(), p)) {
    throw Error(ErrorKind::InvalidArgument, "frame '" + f.name() + "' does not live on the Sol chart");
  }
  const auto e = f.adapted().leg_jets(p, order);
  const Jet z = Jet::variable(3, order, 2, p[2]);
  // g(e_i, E_1) = e^{2z} e^{-z} e_i^x, g(e_i, E_2) = e^{-2z} e^{z} e_i^y, g(e_i, E_3) = e_i^z.
  const Jet ez = exp(z), emz = exp(-1.0 * z);
  std::vector<Jet> a;
  for (std::size_t i = 0; i < 3; ++i) {
    a.push_back(ez * e[i][0]);
    a.push_back(emz * e[i][1]);
    a.push_back(e[i][2]);
  }
  return a;
}

ResidualReport check_curvature_identities(const FrameField& f, std::span<const double> p, double tol) {
  const auto aj = sol_components(f, p, 0);
  auto a = [&](std::size_t i, std::size_t j) { return aj[(i - 1) * 3 + (j - 1)].value(); };
  const IntegrabilityData d = integrability_data(f, p, 1);
  const CurvatureTensor R = frame_curvature(f.adapted(), p);
  const double f1 = d.f1.value(), f2 = d.f2.value(), f3 = d.f3.value();
  const double k1 = d.kappa1.value(), k2 = d.kappa2.value(), s = d.sigma.value();
  auto e = [&](std::size_t i, const Jet& x) { return d.e(i - 1, x).value(); };

  struct Line {
    double frame, data, components;
  };
  const std::array<Line, 7> lines = {{
      {R(0, 2, 0, 1), -e(1, d.sigma) + 2 * k1 * s, -2 * a(2, 3) * a(3, 3)},
      {R(0, 2, 0, 2), e(1, d.kappa1) + s * s - k1 * k1 + k2 * f1, 2 * a(2, 3) * a(2, 3) - 1},
      {R(0, 2, 1, 2), e(1, d.kappa2) - e(3, d.sigma) - k1 * f1 - k1 * k2, -2 * a(1, 3) * a(2, 3)},
      {R(0, 1, 0, 1), e(1, d.f2) - e(2, d.f1) - f1 * f1 - f2 * f2 + 2 * f3 * s - 3 * s * s,
       2 * a(3, 3) * a(3, 3) - 1},
      {R(0, 1, 1, 2), -e(2, d.sigma) + 2 * k2 * s, 2 * a(1, 3) * a(3, 3)},
      {R(1, 2, 0, 2), e(2, d.kappa1) + e(3, d.sigma) + k2 * f2 - k1 * k2, -2 * a(1, 3) * a(2, 3)},
      {R(1, 2, 1, 2), s * s + e(2, d.kappa2) - k1 * f2 - k2 * k2, 2 * a(1, 3) * a(1, 3) - 1},
  }};
  ResidualReport r;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& L = lines[i];
    const double res = std::max({std::abs(L.frame - L.data), std::abs(L.frame - L.components),
                                 std::abs(L.data - L.components)});
    std::string note;
    if (i == 6) note = "reduced form with f1 = f2 = 0 prints (2a13)^2 - 1; evaluated as 2(a13)^2 - 1";
    r.add("curvature/" + std::to_string(i + 1), p, res, tol, std::move(note));
  }
  add_bracket_form(r, d);
  return r;
}

ResidualReport check_thb2(const FrameField& f, std::span<const double> p, double tol) {
  const auto aj = sol_components(f, p, 1);
  auto A = [&](std::size_t i, std::size_t j) -> const Jet& { return aj[(i - 1) * 3 + (j - 1)]; };
  auto a = [&](std::size_t i, std::size_t j) { return A(i, j).value(); };
  const IntegrabilityData d = integrability_data(f, p, 1);

  Eigen::Matrix3d m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = a(i + 1, j + 1);
  if (std::abs(a(1, 1)) > 1e-10) {
    throw Error(ErrorKind::Precondition, "frame '" + f.name() + "': e1 has an E1 component " +
                                             std::to_string(a(1, 1)) + " at " + format_point(p));
  }
  if (std::abs(d.f1.value()) > 1e-10) {
    throw Error(ErrorKind::Precondition, "frame '" + f.name() + "': D_e1 e1 does not vanish (f1 = " +
                                             std::to_string(d.f1.value()) + ") at " + format_point(p));
  }
  if (m.determinant() < 0) {
    throw Error(ErrorKind::Precondition, "frame '" + f.name() + "' is left-handed at " + format_point(p));
  }

  const double s = d.sigma.value(), f2 = d.f2.value(), f3 = d.f3.value(), k1 = d.kappa1.value();
  auto e1 = [&](std::size_t i, std::size_t j) { return d.e(0, A(i, j)).value(); };
  auto e2 = [&](std::size_t i, std::size_t j) { return d.e(1, A(i, j)).value(); };
  auto pair = [](double x, double y, double z) {
    return std::max({std::abs(x - y), std::abs(y - z), std::abs(x - z)});
  };

  const std::array<double, 12> res = {
      e1(1, 2) - a(1, 2) * a(1, 3),
      e1(1, 3) + a(1, 2) * a(1, 2),
      e1(2, 1) + s * a(3, 1),
      e1(2, 2) - (a(1, 2) * a(2, 3) - s * a(3, 2)),
      e1(2, 3) - (-a(1, 2) * a(2, 2) - s * a(3, 3)),
      e1(3, 1) - s * a(2, 1),
      e1(3, 2) - (a(1, 2) * a(3, 3) + s * a(2, 2)),
      e1(3, 3) - (-a(1, 2) * a(3, 2) + s * a(2, 3)),
      pair(f2 * a(2, 1), -a(1, 3) * a(2, 1) + s * a(3, 1), -a(3, 2) + s * a(3, 1)),
      e2(3, 1) + a(2, 1) * a(3, 3),
      e2(2, 1) + a(2, 1) * a(2, 3),
      pair(k1 * a(3, 1), (s - f3) * a(2, 1) - a(1, 3) * a(3, 1), (s - f3) * a(2, 1) + a(2, 2)),
  };
  ResidualReport r;
  for (std::size_t i = 0; i < res.size(); ++i) r.add("frame-derivative/" + std::to_string(i + 1), p, res[i], tol);
  add_bracket_form(r, d);
  return r;
}

BaseCurvature gauss_curvature_base(const IntegrabilityData& d) {
  if (d.order < 2) throw Error(ErrorKind::InvalidArgument, "gauss_curvature_base needs data of order 2");
  const Jet K1 = d.e(0, d.f2) - d.e(1, d.f1) - d.f1 * d.f1 - d.f2 * d.f2;
  const Jet K = K1 + 2.0 * d.f3 * d.sigma;
  BaseCurvature out;
  out.value = K.value();
  out.adapted_value = K1.value();
  out.fiber_derivative = d.e(2, K).value();
  return out;
}

bool is_harmonic(std::span<const IntegrabilityData> samples) {
  return std::all_of(samples.begin(), samples.end(), [](const IntegrabilityData& d) {
    return std::max(std::abs(d.kappa1.value()), std::abs(d.kappa2.value())) < 1e-9;
  });
}

std::array<double, 2> biharmonic_residual(const IntegrabilityData& d, double K) {
  if (d.order < 2) throw Error(ErrorKind::InvalidArgument, "biharmonic_residual needs data of order 2");
  if (std::abs(d.f3.value()) > 1e-9) {
    throw Error(ErrorKind::Precondition, "biharmonic system needs an adapted frame (f3 = " +
                                             std::to_string(d.f3.value()) + ")");
  }
  if (!d.has_bracket_form()) {
    throw Error(ErrorKind::Precondition, "biharmonic system needs frame brackets of the integrability shape");
  }
  const double f1 = d.f1.value(), f2 = d.f2.value(), k1 = d.kappa1.value(), k2 = d.kappa2.value();
  auto e = [&](std::size_t i, const Jet& x) { return d.e(i, x).value(); };
  // Frame Laplacian with D_e1 e1 = -f1 e2, D_e2 e2 = f2 e1, D_e3 e3 = k1 e1 + k2 e2.
  auto laplacian = [&](const Jet& s) {
    double v = 0.0;
    for (std::size_t i = 0; i < 3; ++i) v += d.e(i, d.e(i, s)).value();
    const double s1 = e(0, s), s2 = e(1, s);
    return v + f1 * s2 - f2 * s1 - k1 * s1 - k2 * s2;
  };
  const double S = e(0, d.f1) + e(1, d.f2) - k1 * f1 - k2 * f2;
  const double q = -K + f1 * f1 + f2 * f2;
  const double r1 = -laplacian(d.kappa1) - 2.0 * (f1 * e(0, d.kappa2) + f2 * e(1, d.kappa2)) - k2 * S + k1 * q;
  const double r2 = -laplacian(d.kappa2) + 2.0 * (f1 * e(0, d.kappa1) + f2 * e(1, d.kappa1)) + k1 * S + k2 * q;
  return {r1, r2};
}

std::array<double, 2> biharmonic_residual(const IntegrabilityData& d) {
  return biharmonic_residual(d, gauss_curvature_base(d).adapted_value);
}

}  // namespace solgeom
