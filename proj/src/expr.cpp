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

#include "solgeom/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "solgeom/error.hpp"

namespace solgeom {

namespace {

constexpr std::array<std::pair<std::string_view, Func>, 8> kFunctions = {{
    {"exp", Func::Exp},
    {"log", Func::Log},
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"sinh", Func::Sinh},
    {"cosh", Func::Cosh},
    {"sqrt", Func::Sqrt},
}};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

std::string_view func_name(Func f) {
  for (const auto& [name, fn] : kFunctions) {
    if (fn == f) return name;
  }
  return "?";
}

std::optional<Func> func_from_name(std::string_view name) {
  for (const auto& [n, fn] : kFunctions) {
    if (n == name) return fn;
  }
  return std::nullopt;
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
    : Error(ErrorKind::Parse, "syntax error at offset " + std::to_string(offset) + ": " + detail +
                                  (expected.empty() ? std::string() : " (expected " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

struct Expression::Node {
  Kind kind = Kind::Number;
  double number = 0.0;
  std::string name;
  Func func = Func::Exp;
  Expression a{nullptr}, b{nullptr};
};

Expression::Expression() {
  static const std::shared_ptr<const Node> zero = [] {
    auto n = std::make_shared<Node>();
    return std::shared_ptr<const Node>(std::move(n));
  }();
  node_ = zero;
}

Expression Expression::number(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->number = value;
  return Expression(std::move(n));
}

Expression Expression::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return Expression(std::move(n));
}

Expression Expression::apply(Func f, Expression arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Call;
  n->func = f;
  n->a = std::move(arg);
  return Expression(std::move(n));
}

Expression Expression::binary(Kind k, const Expression& a, const Expression& b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = a;
  n->b = b;
  return Expression(std::move(n));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }

double Expression::number_value() const {
  if (node_->kind != Kind::Number) throw Error(ErrorKind::InvalidArgument, "not a number node");
  return node_->number;
}

const std::string& Expression::name() const {
  if (node_->kind != Kind::Variable) throw Error(ErrorKind::InvalidArgument, "not a variable node");
  return node_->name;
}

Func Expression::func() const {
  if (node_->kind != Kind::Call) throw Error(ErrorKind::InvalidArgument, "not a call node");
  return node_->func;
}

const Expression& Expression::lhs() const {
  if (!node_->a.node_) throw Error(ErrorKind::InvalidArgument, "node has no operand");
  return node_->a;
}

const Expression& Expression::rhs() const {
  if (!node_->b.node_) throw Error(ErrorKind::InvalidArgument, "node has no second operand");
  return node_->b;
}

bool Expression::is_number(double v) const noexcept {
  return node_->kind == Kind::Number && node_->number == v;
}

std::set<std::string> Expression::variables() const {
  std::set<std::string> out;
  std::vector<const Expression*> stack{this};
  while (!stack.empty()) {
    const Expression* e = stack.back();
    stack.pop_back();
    switch (e->kind()) {
      case Kind::Number:
        break;
      case Kind::Variable:
        out.insert(e->name());
        break;
      case Kind::Negate:
      case Kind::Call:
        stack.push_back(&e->lhs());
        break;
      default:
        stack.push_back(&e->lhs());
        stack.push_back(&e->rhs());
    }
  }
  return out;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expression::Kind::Number:
      return a.node_->number == b.node_->number;
    case Expression::Kind::Variable:
      return a.node_->name == b.node_->name;
    case Expression::Kind::Negate:
      return a.lhs() == b.lhs();
    case Expression::Kind::Call:
      return a.node_->func == b.node_->func && a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

Expression operator-(const Expression& a) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = Expression::Kind::Negate;
  n->a = a;
  return Expression(std::move(n));
}
Expression operator+(const Expression& a, const Expression& b) {
  return Expression::binary(Expression::Kind::Add, a, b);
}
Expression operator-(const Expression& a, const Expression& b) {
  return Expression::binary(Expression::Kind::Subtract, a, b);
}
Expression operator*(const Expression& a, const Expression& b) {
  return Expression::binary(Expression::Kind::Multiply, a, b);
}
Expression operator/(const Expression& a, const Expression& b) {
  return Expression::binary(Expression::Kind::Divide, a, b);
}
Expression pow(const Expression& base, const Expression& exponent) {
  return Expression::binary(Expression::Kind::Power, base, exponent);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength: sums 1, products 2, negation 3, powers 4, atoms 5.
int precedence(const Expression& e) {
  switch (e.kind()) {
    case Expression::Kind::Add:
    case Expression::Kind::Subtract:
      return 1;
    case Expression::Kind::Multiply:
    case Expression::Kind::Divide:
      return 2;
    case Expression::Kind::Negate:
      return 3;
    case Expression::Kind::Power:
      return 4;
    case Expression::Kind::Number:
      return e.number_value() < 0 ? 3 : 5;
    default:
      return 5;
  }
}

void format_number(double v, std::string& out) {
  std::array<char, 64> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), std::abs(v));
  if (v < 0 || std::signbit(v)) out += '-';
  out.append(buf.data(), res.ptr);
}

void print(const Expression& e, std::string& out);

void print_child(const Expression& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const Expression& e, std::string& out) {
  using K = Expression::Kind;
  switch (e.kind()) {
    case K::Number:
      format_number(e.number_value(), out);
      return;
    case K::Variable:
      out += e.name();
      return;
    case K::Call:
      out += func_name(e.func());
      out += '(';
      print(e.lhs(), out);
      out += ')';
      return;
    case K::Negate: {
      // -(2) keeps a negated literal distinct from the literal -2.
      const bool literal = e.lhs().kind() == K::Number && !std::signbit(e.lhs().number_value());
      out += '-';
      print_child(e.lhs(), literal || precedence(e.lhs()) < 3, out);
      return;
    }
    case K::Power:
      print_child(e.lhs(), precedence(e.lhs()) < 5, out);
      out += '^';
      print_child(e.rhs(), precedence(e.rhs()) < 3, out);
      return;
    default: {
      const int p = precedence(e);
      print_child(e.lhs(), precedence(e.lhs()) < p, out);
      out += e.kind() == K::Add ? "+" : e.kind() == K::Subtract ? "-" : e.kind() == K::Multiply ? "*" : "/";
      print_child(e.rhs(), precedence(e.rhs()) <= p, out);
    }
  }
}

}  // namespace

std::string Expression::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse_all() {
    Expression e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      expect("end of input");
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  void skip_ws() {
    const std::size_t before = pos_;
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ != before) expected_.clear();
  }

  void advance(std::size_t n) {
    pos_ += n;
    expected_.clear();
  }

  void expect(std::string token) {
    if (std::find(expected_.begin(), expected_.end(), token) == expected_.end()) {
      expected_.push_back(std::move(token));
    }
  }

  bool accept(char c) {
    skip_ws();
    expect(std::string("'") + c + "'");
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance(1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& detail) { throw ParseError(pos_, expected_, detail); }

  Expression parse_expr() {
    Expression lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = lhs + parse_term();
      } else if (accept('-')) {
        lhs = lhs - parse_term();
      } else {
        return lhs;
      }
    }
  }

  Expression parse_term() {
    Expression lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * parse_factor();
      } else if (accept('/')) {
        lhs = lhs / parse_factor();
      } else {
        return lhs;
      }
    }
  }

  Expression parse_factor() {
    if (!accept('-')) return parse_power();
    // A minus sign directly on a literal is part of the literal, unless the
    // literal is a power base: -2^2 is -(2^2).
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Expression num = parse_number();
      if (accept('^')) return -pow(num, parse_factor());
      return Expression::number(-num.number_value());
    }
    return -parse_factor();
  }

  Expression parse_power() {
    Expression base = parse_atom();
    if (accept('^')) return pow(base, parse_factor());
    return base;
  }

  Expression parse_atom() {
    skip_ws();
    expect("number");
    expect("identifier");
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
      if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    }
    if (accept('(')) {
      Expression inner = parse_expr();
      if (!accept(')')) fail("unbalanced parenthesis");
      return inner;
    }
    fail(pos_ < text_.size() ? "unexpected character '" + std::string(1, text_[pos_]) + "'"
                             : "unexpected end of input");
  }

  Expression parse_number() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    auto digits = [&] {
      const std::size_t s = p;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
      return p > s;
    };
    digits();
    if (p < text_.size() && text_[p] == '.') {
      const std::size_t dot = p;
      ++p;
      if (!digits()) {
        pos_ = p;
        expected_ = {"digit"};
        fail("malformed number '" + std::string(text_.substr(start, p - start)) + "'");
      }
      (void)dot;
    }
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
        p = q;
        digits();
      }
    }
    double value = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + p, value);
    if (res.ec != std::errc() || res.ptr != text_.data() + p) {
      fail("malformed number '" + std::string(text_.substr(start, p - start)) + "'");
    }
    advance(p - pos_);
    return Expression::number(value);
  }

  Expression parse_identifier() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    while (p < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_')) {
      ++p;
    }
    const std::string name(text_.substr(start, p - start));
    advance(p - pos_);
    // Call position: the identifier is followed by '('.
    std::size_t q = pos_;
    while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
    if (q < text_.size() && text_[q] == '(') {
      auto f = func_from_name(name);
      if (!f) {
        pos_ = start;
        expected_.clear();
        for (const auto& [n, fn] : kFunctions) expected_.emplace_back(n);
        fail("unknown function '" + name + "'");
      }
      accept('(');
      Expression arg = parse_expr();
      if (!accept(')')) fail("unbalanced parenthesis");
      return Expression::apply(*f, std::move(arg));
    }
    return Expression::variable(name);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> expected_;
};

}  // namespace

Expression parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation

JetScope& JetScope::bind(std::string name, Jet value) {
  if (value.nvars() != nvars_) throw Error(ErrorKind::InvalidArgument, "jet scope: variable count mismatch");
  for (auto& [n, j] : jets_) {
    if (n == name) {
      j = std::move(value);
      return *this;
    }
  }
  jets_.emplace_back(std::move(name), std::move(value));
  return *this;
}

JetScope& JetScope::bind_param(std::string name, double value) {
  params_[std::move(name)] = value;
  return *this;
}

JetScope& JetScope::bind_params(const ParamMap& params) {
  for (const auto& [k, v] : params) params_[k] = v;
  return *this;
}

Jet JetScope::lookup(std::string_view name) const {
  for (const auto& [n, j] : jets_) {
    if (n == name) return j;
  }
  if (auto it = params_.find(name); it != params_.end()) return Jet::constant(nvars_, order_, it->second);
  throw Error(ErrorKind::InvalidArgument, "unbound variable '" + std::string(name) + "'");
}

namespace {

void check_finite(const Jet& j, const Expression& e) {
  for (double c : j.coefficients()) {
    if (!std::isfinite(c)) throw DomainError(e.to_string(), "non-finite result");
  }
}

Jet eval_node(const Expression& e, const JetScope& scope) {
  using K = Expression::Kind;
  Jet out;
  switch (e.kind()) {
    case K::Number:
      return Jet::constant(scope.nvars(), scope.order(), e.number_value());
    case K::Variable:
      return scope.lookup(e.name());
    case K::Negate:
      return -eval_node(e.lhs(), scope);
    case K::Add:
      out = eval_node(e.lhs(), scope) + eval_node(e.rhs(), scope);
      break;
    case K::Subtract:
      out = eval_node(e.lhs(), scope) - eval_node(e.rhs(), scope);
      break;
    case K::Multiply:
      out = eval_node(e.lhs(), scope) * eval_node(e.rhs(), scope);
      break;
    case K::Divide: {
      Jet num = eval_node(e.lhs(), scope);
      Jet den = eval_node(e.rhs(), scope);
      if (den.value() == 0.0) throw DomainError(e.to_string(), "division by zero");
      out = num / den;
      break;
    }
    case K::Power: {
      Jet base = eval_node(e.lhs(), scope);
      Jet expo = eval_node(e.rhs(), scope);
      const double b = base.value();
      if (expo.is_constant()) {
        const double p = expo.value();
        const bool integral = p == std::floor(p) && std::abs(p) <= 1024.0;
        if (integral) {
          if (p < 0 && b == 0.0) throw DomainError(e.to_string(), "zero raised to a negative power");
        } else if (b < 0.0) {
          throw DomainError(e.to_string(), "negative base with non-integer exponent");
        } else if (b == 0.0 && (p < 0 || base.order() > 0)) {
          throw DomainError(e.to_string(), "zero base with non-integer exponent");
        }
        out = pow(base, p);
      } else {
        if (b <= 0.0) throw DomainError(e.to_string(), "non-positive base with variable exponent");
        out = exp(expo * log(base));
      }
      break;
    }
    case K::Call: {
      Jet arg = eval_node(e.lhs(), scope);
      const double v = arg.value();
      switch (e.func()) {
        case Func::Exp:
          out = exp(arg);
          break;
        case Func::Log:
          if (v <= 0.0) throw DomainError(e.to_string(), "log of a non-positive value");
          out = log(arg);
          break;
        case Func::Sin:
          out = sin(arg);
          break;
        case Func::Cos:
          out = cos(arg);
          break;
        case Func::Tan:
          if (std::cos(v) == 0.0) throw DomainError(e.to_string(), "tan at a pole");
          out = tan(arg);
          break;
        case Func::Sinh:
          out = sinh(arg);
          break;
        case Func::Cosh:
          out = cosh(arg);
          break;
        case Func::Sqrt:
          if (v < 0.0) throw DomainError(e.to_string(), "sqrt of a negative value");
          if (v == 0.0 && arg.order() > 0) throw DomainError(e.to_string(), "sqrt is not differentiable at 0");
          out = sqrt(arg);
          break;
      }
      break;
    }
  }
  check_finite(out, e);
  return out;
}

}  // namespace

Jet evaluate(const Expression& expr, const JetScope& scope) { return eval_node(expr, scope); }

Jet eval_jet(const Expression& expr, std::span<const std::string> vars, std::span<const double> values,
             int max_order, const ParamMap& params) {
  if (vars.size() != values.size()) throw Error(ErrorKind::InvalidArgument, "eval_jet: names/values size mismatch");
  if (max_order < 0 || max_order > kMaxJetOrder) {
    throw Error(ErrorKind::InvalidArgument, "eval_jet: max_order must lie in [0, 4]");
  }
  JetScope scope(vars.size(), max_order);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    scope.bind(vars[i], Jet::variable(vars.size(), max_order, i, values[i]));
  }
  scope.bind_params(params);
  return evaluate(expr, scope);
}

double eval_value(const Expression& expr, std::span<const std::string> vars, std::span<const double> values,
                  const ParamMap& params) {
  return eval_jet(expr, vars, values, 0, params).value();
}

}  // namespace solgeom
