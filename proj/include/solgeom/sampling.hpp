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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "solgeom/geometry.hpp"

namespace solgeom {

/// SplitMix64 (Steele, Lea, Flood 2014). Portable and fully specified, so point
/// sets are reproducible across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// Seed of substream `index` derived from `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

inline constexpr double kBoxHalfWidth = 2.0;

/// `count` points uniform in [-2, 2]^dim.
std::vector<Point> random_points(std::size_t dim, std::size_t count, std::uint64_t seed);
/// First `count` Halton points (bases 2, 3, 5) mapped to [-2, 2]^dim, skipping the origin.
std::vector<Point> halton_points(std::size_t dim, std::size_t count);
/// Tensor grid with `per_axis` nodes per axis covering [-2, 2]^dim.
std::vector<Point> grid_points(std::size_t dim, std::size_t per_axis);

/// Parses a sample spec: "random:N:SEED", "quasi:N", "grid:N" or an explicit
/// list "x,y,z;x,y,z". Throws Error(InvalidArgument) on malformed specs.
std::vector<Point> parse_points(std::string_view spec, std::size_t dim);

}  // namespace solgeom
