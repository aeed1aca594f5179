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

#include "solgeom/jet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "solgeom/error.hpp"

namespace solgeom {

namespace {

constexpr std::array<double, 9> kFactorial = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

double factorial(int n) {
  if (n < static_cast<int>(kFactorial.size())) return kFactorial[static_cast<std::size_t>(n)];
  double r = kFactorial.back();
  for (int k = static_cast<int>(kFactorial.size()); k <= n; ++k) r *= k;
  return r;
}

// Exponent tuples of total degree `degree`, first exponent descending.
void enumerate_degree(std::size_t nvars, int degree, std::vector<std::uint8_t>& prefix,
                      std::vector<std::uint8_t>& out) {
  if (prefix.size() + 1 == nvars) {
    prefix.push_back(static_cast<std::uint8_t>(degree));
    out.insert(out.end(), prefix.begin(), prefix.end());
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(static_cast<std::uint8_t>(e));
    enumerate_degree(nvars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

std::uint64_t encode(std::span<const std::uint8_t> exps) {
  std::uint64_t key = 0;
  for (auto e : exps) key = key * 64 + e;
  return key;
}

struct LayoutCache {
  std::mutex mutex;
  std::map<std::pair<std::size_t, int>, std::unique_ptr<JetLayout>> layouts;
  std::map<std::pair<std::size_t, int>, std::unordered_map<std::uint64_t, std::size_t>> index;
};

LayoutCache& cache() {
  static LayoutCache c;
  return c;
}

}  // namespace

JetLayout::JetLayout(std::size_t nvars, int order) : nvars_(nvars), order_(order) {
  degree_end_.resize(static_cast<std::size_t>(order) + 1);
  if (nvars == 0) {
    degrees_.push_back(0);
    std::fill(degree_end_.begin(), degree_end_.end(), 1);
    return;
  }
  std::vector<std::uint8_t> prefix;
  for (int d = 0; d <= order; ++d) {
    const std::size_t before = exponents_.size() / nvars;
    enumerate_degree(nvars, d, prefix, exponents_);
    const std::size_t after = exponents_.size() / nvars;
    degrees_.insert(degrees_.end(), after - before, d);
    degree_end_[static_cast<std::size_t>(d)] = after;
  }
}

const JetLayout& JetLayout::get(std::size_t nvars, int order) {
  if (order < 0 || order > kMaxJetOrder) {
    throw Error(ErrorKind::InvalidArgument, "jet order must lie in [0, 4]");
  }
  if (nvars > 16) throw Error(ErrorKind::InvalidArgument, "too many jet variables");
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  auto key = std::make_pair(nvars, order);
  auto it = c.layouts.find(key);
  if (it != c.layouts.end()) return *it->second;

  auto layout = std::unique_ptr<JetLayout>(new JetLayout(nvars, order));
  auto& idx = c.index[key];
  const std::size_t n = layout->size();
  for (std::size_t m = 0; m < n; ++m) idx.emplace(encode(layout->exponents(m)), m);

  std::vector<std::uint8_t> buf(nvars);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (layout->degrees_[a] + layout->degrees_[b] > order) continue;
      auto ea = layout->exponents(a);
      auto eb = layout->exponents(b);
      for (std::size_t v = 0; v < nvars; ++v) buf[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
      layout->products_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                   static_cast<std::uint32_t>(idx.at(encode(buf)))});
    }
  }
  layout->lowered_.assign(n * nvars, npos);
  for (std::size_t m = 0; m < n; ++m) {
    auto em = layout->exponents(m);
    for (std::size_t v = 0; v < nvars; ++v) {
      if (em[v] == 0) continue;
      std::copy(em.begin(), em.end(), buf.begin());
      --buf[v];
      layout->lowered_[m * nvars + v] = idx.at(encode(buf));
    }
  }
  auto* raw = layout.get();
  c.layouts.emplace(key, std::move(layout));
  return *raw;
}

std::size_t JetLayout::index_of(std::span<const std::uint8_t> exps) const {
  if (exps.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "multi-index has wrong arity");
  int deg = 0;
  for (auto e : exps) deg += e;
  if (deg > order_) return size();
  // Within-degree order is descending lexicographic; a linear scan over one
  // degree block is short enough for the sizes used here.
  const std::size_t begin = deg == 0 ? 0 : degree_end_[static_cast<std::size_t>(deg - 1)];
  const std::size_t end = degree_end_[static_cast<std::size_t>(deg)];
  for (std::size_t m = begin; m < end; ++m) {
    auto em = exponents(m);
    if (std::equal(em.begin(), em.end(), exps.begin())) return m;
  }
  return size();
}

Jet::Jet(std::size_t nvars, int order)
    : nvars_(nvars), order_(order), coeffs_(JetLayout::get(nvars, order).size(), 0.0) {}

Jet Jet::constant(std::size_t nvars, int order, double value) {
  Jet j(nvars, order);
  j.coeffs_[0] = value;
  return j;
}

Jet Jet::variable(std::size_t nvars, int order, std::size_t index, double value) {
  if (index >= nvars) throw Error(ErrorKind::InvalidArgument, "jet variable index out of range");
  Jet j = constant(nvars, order, value);
  if (order >= 1) j.coeffs_[1 + index] = 1.0;
  return j;
}

double Jet::partial(std::initializer_list<std::size_t> vars) const {
  return partial(std::span<const std::size_t>(vars.begin(), vars.size()));
}

double Jet::partial(std::span<const std::size_t> vars) const {
  std::vector<std::uint8_t> exps(nvars_, 0);
  for (auto v : vars) {
    if (v >= nvars_) throw Error(ErrorKind::InvalidArgument, "partial: variable index out of range");
    ++exps[v];
  }
  return partial_by_exponents(exps);
}

double Jet::partial_by_exponents(std::span<const std::uint8_t> exps) const {
  const auto& lay = layout();
  const std::size_t m = lay.index_of(exps);
  if (m >= lay.size()) {
    throw Error(ErrorKind::InvalidArgument, "partial: order exceeds the jet order");
  }
  double scale = 1.0;
  for (auto e : exps) scale *= factorial(e);
  return coeffs_[m] * scale;
}

Jet Jet::derivative(std::size_t var) const {
  if (var >= nvars_) throw Error(ErrorKind::InvalidArgument, "derivative: variable index out of range");
  if (order_ == 0) throw Error(ErrorKind::InvalidArgument, "derivative of an order-0 jet");
  const auto& lay = layout();
  Jet out(nvars_, order_ - 1);
  for (std::size_t m = 1; m < lay.size(); ++m) {
    const std::size_t low = lay.lowered(m, var);
    if (low == JetLayout::npos) continue;
    out.coeffs_[low] += lay.exponents(m)[var] * coeffs_[m];
  }
  return out;
}

Jet Jet::truncated(int order) const {
  if (order >= order_) return *this;
  Jet out(nvars_, order);
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

bool Jet::is_constant() const noexcept {
  return std::all_of(coeffs_.begin() + (coeffs_.empty() ? 0 : 1), coeffs_.end(),
                     [](double c) { return c == 0.0; });
}

namespace {
void check_compatible(const Jet& a, const Jet& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::InvalidArgument, "jets over different variable sets");
}
}  // namespace

Jet& Jet::operator+=(const Jet& rhs) {
  check_compatible(*this, rhs);
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  check_compatible(*this, rhs);
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Jet& Jet::operator*=(const Jet& rhs) { return *this = *this * rhs; }

Jet& Jet::operator+=(double rhs) {
  coeffs_[0] += rhs;
  return *this;
}

Jet& Jet::operator*=(double rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Jet operator-(Jet a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Jet operator*(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  const int order = std::min(a.order_, b.order_);
  Jet out(a.nvars_, order);
  for (const auto& t : JetLayout::get(a.nvars_, order).products()) {
    out.coeffs_[t.out] += a.coeffs_[t.lhs] * b.coeffs_[t.rhs];
  }
  return out;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet compose_univariate(const Jet& u, std::span<const double> derivatives_at_value) {
  const int k = u.order();
  if (derivatives_at_value.size() < static_cast<std::size_t>(k) + 1) {
    throw Error(ErrorKind::InvalidArgument, "compose_univariate: too few derivatives");
  }
  Jet delta = u;
  delta.coefficients()[0] = 0.0;
  Jet r = Jet::constant(u.nvars(), k, derivatives_at_value[static_cast<std::size_t>(k)] / factorial(k));
  for (int i = k - 1; i >= 0; --i) {
    r = r * delta;
    r += derivatives_at_value[static_cast<std::size_t>(i)] / factorial(i);
  }
  return r;
}

Jet compose(const Jet& outer, std::span<const Jet> inner) {
  if (inner.size() != outer.nvars()) {
    throw Error(ErrorKind::InvalidArgument, "compose: inner jet count must equal outer variable count");
  }
  if (inner.empty()) throw Error(ErrorKind::InvalidArgument, "compose: no inner jets");
  const std::size_t n = inner.front().nvars();
  int order = outer.order();
  for (const auto& j : inner) {
    if (j.nvars() != n) throw Error(ErrorKind::InvalidArgument, "compose: inner jets disagree on variables");
    order = std::min(order, j.order());
  }
  // powers[k][e] = (inner_k - inner_k(0))^e
  std::vector<std::vector<Jet>> powers(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) {
    Jet delta = inner[k].truncated(order);
    delta.coefficients()[0] = 0.0;
    powers[k].push_back(Jet::constant(n, order, 1.0));
    for (int e = 1; e <= order; ++e) powers[k].push_back(powers[k].back() * delta);
  }
  const auto& lay = JetLayout::get(outer.nvars(), outer.order());
  Jet out(n, order);
  const std::size_t count = lay.size_for(order);
  for (std::size_t m = 0; m < count; ++m) {
    const double c = outer.coefficients()[m];
    if (c == 0.0) continue;
    Jet term = Jet::constant(n, order, c);
    auto exps = lay.exponents(m);
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] != 0) term = term * powers[k][exps[k]];
    }
    out += term;
  }
  return out;
}

Jet exp(const Jet& u) {
  const double e = std::exp(u.value());
  std::array<double, kMaxJetOrder + 1> d;
  d.fill(e);
  return compose_univariate(u, d);
}

Jet log(const Jet& u) {
  const double x = u.value();
  std::array<double, kMaxJetOrder + 1> d{};
  d[0] = std::log(x);
  double inv_pow = 1.0;
  for (int k = 1; k <= kMaxJetOrder; ++k) {
    inv_pow /= x;
    d[static_cast<std::size_t>(k)] = ((k % 2 == 1) ? 1.0 : -1.0) * factorial(k - 1) * inv_pow;
  }
  return compose_univariate(u, d);
}

Jet sin(const Jet& u) {
  const double s = std::sin(u.value()), c = std::cos(u.value());
  const std::array<double, kMaxJetOrder + 1> d = {s, c, -s, -c, s};
  return compose_univariate(u, d);
}

Jet cos(const Jet& u) {
  const double s = std::sin(u.value()), c = std::cos(u.value());
  const std::array<double, kMaxJetOrder + 1> d = {c, -s, -c, s, c};
  return compose_univariate(u, d);
}

Jet tan(const Jet& u) {
  // d/du P(tan u) = P'(tan u) (1 + tan^2 u); track P as a polynomial in t.
  const double t = std::tan(u.value());
  std::vector<double> poly = {0.0, 1.0};
  std::array<double, kMaxJetOrder + 1> d{};
  for (int k = 0; k <= kMaxJetOrder; ++k) {
    double v = 0.0;
    for (std::size_t i = poly.size(); i-- > 0;) v = v * t + poly[i];
    d[static_cast<std::size_t>(k)] = v;
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 1; i < poly.size(); ++i) {
      const double dp = static_cast<double>(i) * poly[i];
      next[i - 1] += dp;
      next[i + 1] += dp;
    }
    poly = std::move(next);
  }
  return compose_univariate(u, d);
}

Jet sinh(const Jet& u) {
  const double s = std::sinh(u.value()), c = std::cosh(u.value());
  const std::array<double, kMaxJetOrder + 1> d = {s, c, s, c, s};
  return compose_univariate(u, d);
}

Jet cosh(const Jet& u) {
  const double s = std::sinh(u.value()), c = std::cosh(u.value());
  const std::array<double, kMaxJetOrder + 1> d = {c, s, c, s, c};
  return compose_univariate(u, d);
}

Jet sqrt(const Jet& u) { return pow(u, 0.5); }

Jet reciprocal(const Jet& u) {
  const double x = u.value();
  std::array<double, kMaxJetOrder + 1> d{};
  double inv_pow = 1.0 / x;
  d[0] = inv_pow;
  for (int k = 1; k <= kMaxJetOrder; ++k) {
    inv_pow /= x;
    d[static_cast<std::size_t>(k)] = ((k % 2 == 1) ? -1.0 : 1.0) * factorial(k) * inv_pow;
  }
  return compose_univariate(u, d);
}

Jet pow(const Jet& u, double p) {
  if (p == std::floor(p) && std::abs(p) <= 1024.0) {
    auto n = static_cast<long>(std::abs(p));
    Jet result = Jet::constant(u.nvars(), u.order(), 1.0);
    Jet base = u;
    while (n > 0) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return p < 0 ? reciprocal(result) : result;
  }
  const double x = u.value();
  std::array<double, kMaxJetOrder + 1> d{};
  double falling = 1.0;
  for (int k = 0; k <= kMaxJetOrder; ++k) {
    d[static_cast<std::size_t>(k)] = falling * (k == 0 && p == 0.5 ? std::sqrt(x) : std::pow(x, p - k));
    falling *= (p - k);
  }
  return compose_univariate(u, d);
}

}  // namespace solgeom
