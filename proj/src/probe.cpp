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

#include "solgeom/probe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "solgeom/error.hpp"
#include "solgeom/sampling.hpp"

namespace solgeom {

std::array<double, 4> rch_equations(const RchPoint& x, bool control) {
  const double s = control ? -1.0 : 1.0;
  const double sg = x[0], a13 = x[1], a23 = x[2], a33 = x[3];
  return {sg * sg - 2 * a23 * a23 + s, sg * sg - 2 * a13 * a13 + s, 2 * a13 * a23,
          a13 * a13 + a23 * a23 + a33 * a33 - 1};
}

double rch_residual(const RchPoint& x, bool control) {
  const auto r = rch_equations(x, control);
  return std::abs(r[0]) + std::abs(r[1]) + std::abs(r[2]) + std::abs(r[3]);
}

namespace {

struct Vertex {
  RchPoint x;
  double f;
};

Vertex nelder_mead(const RchPoint& start, bool control) {
  constexpr int kMaxIter = 4000;
  constexpr double kStep = 0.25;
  auto f = [&](const RchPoint& x) { return rch_residual(x, control); };
  std::array<Vertex, 5> s;
  s[0] = {start, f(start)};
  for (std::size_t i = 0; i < 4; ++i) {
    RchPoint x = start;
    x[i] += kStep;
    s[i + 1] = {x, f(x)};
  }
  auto lerp = [](const RchPoint& a, const RchPoint& b, double t) {
    RchPoint r;
    for (std::size_t k = 0; k < 4; ++k) r[k] = a[k] + t * (b[k] - a[k]);
    return r;
  };
  for (int it = 0; it < kMaxIter; ++it) {
    std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    if (s.back().f - s.front().f < 1e-15) {
      double size = 0.0;
      for (std::size_t i = 1; i < 5; ++i)
        for (std::size_t k = 0; k < 4; ++k) size = std::max(size, std::abs(s[i].x[k] - s[0].x[k]));
      if (size < 1e-12) break;
    }
    RchPoint c{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) c[k] += s[i].x[k] / 4.0;
    const Vertex r{lerp(c, s[4].x, -1.0), 0.0};
    const double fr = f(r.x);
    if (fr < s[0].f) {
      const RchPoint e = lerp(c, s[4].x, -2.0);
      const double fe = f(e);
      s[4] = fe < fr ? Vertex{e, fe} : Vertex{r.x, fr};
    } else if (fr < s[3].f) {
      s[4] = {r.x, fr};
    } else {
      const bool outside = fr < s[4].f;
      const RchPoint k = outside ? lerp(c, r.x, 0.5) : lerp(c, s[4].x, 0.5);
      const double fk = f(k);
      if (fk < std::min(fr, s[4].f)) {
        s[4] = {k, fk};
      } else {
        for (std::size_t i = 1; i < 5; ++i) {
          s[i].x = lerp(s[0].x, s[i].x, 0.5);
          s[i].f = f(s[i].x);
        }
      }
    }
  }
  return *std::min_element(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
}

// Levenberg-Marquardt on the squared residual vector.
Vertex polish(const RchPoint& start, bool control) {
  Eigen::Vector4d x(start[0], start[1], start[2], start[3]);
  auto residuals = [&](const Eigen::Vector4d& v) {
    const auto r = rch_equations({v(0), v(1), v(2), v(3)}, control);
    return Eigen::Vector4d(r[0], r[1], r[2], r[3]);
  };
  double lambda = 1e-3;
  Eigen::Vector4d r = residuals(x);
  for (int it = 0; it < 200 && r.squaredNorm() > 1e-32; ++it) {
    const double sg = x(0), a = x(1), b = x(2), c = x(3);
    Eigen::Matrix4d J;
    J << 2 * sg, 0, -4 * b, 0,  //
        2 * sg, -4 * a, 0, 0,   //
        0, 2 * b, 2 * a, 0,     //
        0, 2 * a, 2 * b, 2 * c;
    const Eigen::Matrix4d JtJ = J.transpose() * J;
    const Eigen::Vector4d g = J.transpose() * r;
    Eigen::Matrix4d A = JtJ;
    A.diagonal().array() += lambda * (1.0 + JtJ.diagonal().array());
    const Eigen::Vector4d step = A.ldlt().solve(-g);
    const Eigen::Vector4d trial = x + step;
    const Eigen::Vector4d rt = residuals(trial);
    if (rt.squaredNorm() < r.squaredNorm()) {
      x = trial;
      r = rt;
      lambda = std::max(lambda / 3.0, 1e-12);
    } else {
      lambda *= 4.0;
      if (lambda > 1e12) break;
    }
  }
  const RchPoint p = {x(0), x(1), x(2), x(3)};
  return {p, rch_residual(p, control)};
}

bool lex_less(const RchPoint& a, const RchPoint& b) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(a[k] - b[k]) > 1e-6) return a[k] < b[k];
  }
  return false;
}

}  // namespace

RchProbeResult probe_rch_infeasibility(int restarts, std::uint64_t seed, bool control) {
  if (restarts < 1) throw Error(ErrorKind::InvalidArgument, "probe needs at least one restart");
  std::vector<Vertex> minima;
  minima.reserve(static_cast<std::size_t>(restarts));
  for (int i = 0; i < restarts; ++i) {
    SplitMix64 g(substream_seed(seed, static_cast<std::uint64_t>(i)));
    RchPoint start;
    for (auto& v : start) v = g.uniform(-1.5, 1.5);
    Vertex best = nelder_mead(start, control);
    const Vertex pol = polish(best.x, control);
    if (pol.f < best.f) best = pol;
    for (auto& v : best.x) v = std::abs(v);
    minima.push_back(best);
  }
  double fmin = minima.front().f;
  for (const auto& m : minima) fmin = std::min(fmin, m.f);
  const Vertex* pick = nullptr;
  for (const auto& m : minima) {
    if (m.f > fmin + 1e-9) continue;
    if (!pick || lex_less(m.x, pick->x)) pick = &m;
  }
  RchProbeResult out;
  out.min_residual = fmin;
  out.argmin = pick->x;
  out.restarts = restarts;
  out.seed = seed;
  out.control = control;
  return out;
}

}  // namespace solgeom
