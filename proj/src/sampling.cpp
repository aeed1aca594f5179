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

#include "solgeom/sampling.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "solgeom/error.hpp"

namespace solgeom {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return g.next();
}

std::vector<Point> random_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  SplitMix64 g(seed);
  std::vector<Point> out(count, Point(dim));
  for (auto& p : out)
    for (auto& x : p) x = g.uniform(-kBoxHalfWidth, kBoxHalfWidth);
  return out;
}

namespace {

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

}  // namespace

std::vector<Point> halton_points(std::size_t dim, std::size_t count) {
  constexpr std::array<std::uint64_t, 3> bases = {2, 3, 5};
  if (dim > bases.size()) throw Error(ErrorKind::InvalidArgument, "halton_points: dimension above 3");
  std::vector<Point> out;
  out.reserve(count);
  for (std::uint64_t i = 1; out.size() < count; ++i) {
    Point p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = -kBoxHalfWidth + 2.0 * kBoxHalfWidth * radical_inverse(i, bases[k]);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point> grid_points(std::size_t dim, std::size_t per_axis) {
  if (per_axis == 0) return {};
  std::vector<Point> out;
  std::vector<std::size_t> idx(dim, 0);
  const double h = per_axis == 1 ? 0.0 : 2.0 * kBoxHalfWidth / static_cast<double>(per_axis - 1);
  for (;;) {
    Point p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = per_axis == 1 ? 0.0 : -kBoxHalfWidth + h * static_cast<double>(idx[k]);
    out.push_back(std::move(p));
    std::size_t k = 0;
    while (k < dim && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == dim) break;
  }
  return out;
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view spec) {
  std::uint64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidArgument, "malformed sample spec '" + std::string(spec) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Point> parse_points(std::string_view spec, std::size_t dim) {
  spec = trim(spec);
  const auto parts = split(spec, ':');
  std::vector<Point> out;
  if (parts[0] == "random") {
    if (parts.size() != 3) throw Error(ErrorKind::InvalidArgument, "sample spec must read random:N:SEED");
    out = random_points(dim, parse_uint(parts[1], spec), parse_uint(parts[2], spec));
  } else if (parts[0] == "quasi") {
    if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, "sample spec must read quasi:N");
    out = halton_points(dim, parse_uint(parts[1], spec));
  } else if (parts[0] == "grid") {
    if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, "sample spec must read grid:N");
    out = grid_points(dim, parse_uint(parts[1], spec));
  } else {
    for (auto item : split(spec, ';')) {
      item = trim(item);
      if (item.empty()) continue;
      Point p;
      for (auto c : split(item, ',')) {
        c = trim(c);
        double v = 0.0;
        auto res = std::from_chars(c.data(), c.data() + c.size(), v);
        if (c.empty() || res.ec != std::errc() || res.ptr != c.data() + c.size() || !std::isfinite(v)) {
          throw Error(ErrorKind::InvalidArgument, "malformed coordinate '" + std::string(c) + "' in sample spec");
        }
        p.push_back(v);
      }
      if (p.size() != dim) {
        throw Error(ErrorKind::InvalidArgument, "sample point " + format_point(p) + " does not have " +
                                                    std::to_string(dim) + " coordinates");
      }
      out.push_back(std::move(p));
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "sample spec '" + std::string(spec) + "' is empty");
  return out;
}

}  // namespace solgeom
