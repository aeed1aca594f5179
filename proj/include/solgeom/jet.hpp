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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace solgeom {

/// Maximum total derivative order carried by a Jet.
inline constexpr int kMaxJetOrder = 4;

/// Monomial table for `nvars` variables up to total degree `order`.
///
/// Monomials are sorted by total degree, then lexicographically (descending in
/// the first exponent). Because the within-degree order does not depend on
/// `order`, the layout for a lower order is a prefix of the layout for a
/// higher one; truncating a jet is just dropping its tail.
class JetLayout {
 public:
  static const JetLayout& get(std::size_t nvars, int order);

  std::size_t nvars() const noexcept { return nvars_; }
  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  /// Number of monomials of total degree <= `order`.
  std::size_t size_for(int order) const noexcept { return degree_end_[static_cast<std::size_t>(order)]; }

  std::span<const std::uint8_t> exponents(std::size_t monomial) const noexcept {
    return {exponents_.data() + monomial * nvars_, nvars_};
  }
  int degree(std::size_t monomial) const noexcept { return degrees_[monomial]; }

  /// Position of the monomial with the given exponents, or size() if degree > order.
  std::size_t index_of(std::span<const std::uint8_t> exps) const;

  struct ProductTerm {
    std::uint32_t lhs, rhs, out;
  };
  /// All (lhs, rhs) pairs whose product stays within the layout order.
  std::span<const ProductTerm> products() const noexcept { return products_; }
  /// For each monomial m and each variable v: index of m with exponent v lowered by one
  /// (or npos), with the original exponent (the derivative factor).
  std::size_t lowered(std::size_t monomial, std::size_t var) const noexcept {
    return lowered_[monomial * nvars_ + var];
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  JetLayout(std::size_t nvars, int order);

  std::size_t nvars_;
  int order_;
  std::vector<std::uint8_t> exponents_;
  std::vector<int> degrees_;
  std::vector<std::size_t> degree_end_;
  std::vector<ProductTerm> products_;
  std::vector<std::size_t> lowered_;
};

/// Truncated multivariate Taylor polynomial: a scalar together with all mixed
/// partial derivatives with respect to `nvars` variables up to total order
/// `order`, stored once per multi-index as Taylor coefficients
/// (partial / multi-factorial).
///
/// Binary operations between jets of different orders produce a jet of the
/// lower order; the variable count must match.
class Jet {
 public:
  Jet() = default;
  Jet(std::size_t nvars, int order);

  static Jet constant(std::size_t nvars, int order, double value);
  static Jet variable(std::size_t nvars, int order, std::size_t index, double value);

  std::size_t nvars() const noexcept { return nvars_; }
  int order() const noexcept { return order_; }
  double value() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_[0]; }

  /// Partial derivative selected by a list of variable indices; {0, 0, 2} is d^3/dx0^2 dx2.
  double partial(std::initializer_list<std::size_t> vars) const;
  double partial(std::span<const std::size_t> vars) const;
  /// Partial derivative selected by exponent counts per variable.
  double partial_by_exponents(std::span<const std::uint8_t> exps) const;
  double d(std::size_t i) const { return partial({i}); }
  double d(std::size_t i, std::size_t j) const { return partial({i, j}); }

  std::span<const double> coefficients() const noexcept { return coeffs_; }
  std::span<double> coefficients() noexcept { return coeffs_; }
  const JetLayout& layout() const { return JetLayout::get(nvars_, order_); }

  /// Derivative with respect to variable `var`, one order lower.
  Jet derivative(std::size_t var) const;
  Jet truncated(int order) const;
  bool is_constant() const noexcept;

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs);
  Jet& operator+=(double rhs);
  Jet& operator*=(double rhs);

  friend Jet operator-(Jet a);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, double b) { return a += b; }
  friend Jet operator+(double a, Jet b) { return b += a; }
  friend Jet operator-(Jet a, double b) { return a += -b; }
  friend Jet operator-(double a, Jet b) { return (-b) += a; }
  friend Jet operator*(Jet a, double b) { return a *= b; }
  friend Jet operator*(double a, Jet b) { return b *= a; }
  friend Jet operator/(Jet a, double b) { return a *= 1.0 / b; }

 private:
  std::size_t nvars_ = 0;
  int order_ = 0;
  std::vector<double> coeffs_;
};

/// Composes a univariate function with a jet: given f(u0), f'(u0), ..., f^(k)(u0)
/// (k >= u.order()), returns the jet of f(u).
Jet compose_univariate(const Jet& u, std::span<const double> derivatives_at_value);

/// Composes a multivariate jet (Taylor expansion of T about `inner[i].value()`)
/// with inner jets, giving T(inner(x)) as a jet in the inner variables.
Jet compose(const Jet& outer, std::span<const Jet> inner);

// Elementary functions. These do not check domains; see expr.cpp for the checked path.
Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet tan(const Jet& u);
Jet sinh(const Jet& u);
Jet cosh(const Jet& u);
Jet sqrt(const Jet& u);
Jet reciprocal(const Jet& u);
/// u^p for a constant exponent. Integral p uses repeated multiplication and accepts any base.
Jet pow(const Jet& u, double p);

}  // namespace solgeom
