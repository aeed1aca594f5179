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

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "solgeom/jet.hpp"

namespace solgeom {

/// The closed set of functions an Expression may apply.
enum class Func { Exp, Log, Sin, Cos, Tan, Sinh, Cosh, Sqrt };

std::string_view func_name(Func f);
std::optional<Func> func_from_name(std::string_view name);

/// Immutable closed-form scalar expression tree. Copies share structure.
class Expression {
 public:
  enum class Kind { Number, Variable, Negate, Add, Subtract, Multiply, Divide, Power, Call };

  Expression();  // the literal 0
  static Expression number(double value);
  static Expression variable(std::string name);
  static Expression apply(Func f, Expression arg);

  Kind kind() const noexcept;
  double number_value() const;
  const std::string& name() const;
  Func func() const;
  /// Operand of Negate / Call, or left operand of a binary node.
  const Expression& lhs() const;
  const Expression& rhs() const;

  bool is_number(double v) const noexcept;
  std::set<std::string> variables() const;
  /// Shortest text that parses back to a structurally identical tree.
  std::string to_string() const;

  /// Structural equality.
  friend bool operator==(const Expression& a, const Expression& b);

  friend Expression operator-(const Expression& a);
  friend Expression operator+(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a, const Expression& b);
  friend Expression operator*(const Expression& a, const Expression& b);
  friend Expression operator/(const Expression& a, const Expression& b);
  friend Expression pow(const Expression& base, const Expression& exponent);

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expression binary(Kind k, const Expression& a, const Expression& b);
  std::shared_ptr<const Node> node_;
};

inline Expression exp(const Expression& e) { return Expression::apply(Func::Exp, e); }
inline Expression log(const Expression& e) { return Expression::apply(Func::Log, e); }
inline Expression sin(const Expression& e) { return Expression::apply(Func::Sin, e); }
inline Expression cos(const Expression& e) { return Expression::apply(Func::Cos, e); }
inline Expression sqrt(const Expression& e) { return Expression::apply(Func::Sqrt, e); }

/// Parses `text` per the grammar
///   expr := term (('+'|'-') term)*;  term := factor (('*'|'/') factor)*;
///   factor := '-' factor | power;     power := atom ('^' factor)?;
///   atom := NUMBER | IDENT | IDENT '(' expr ')' | '(' expr ')'.
/// Throws ParseError with the byte offset and the expected-token set.
Expression parse(std::string_view text);

using ParamMap = std::map<std::string, double, std::less<>>;

/// Variable bindings for jet evaluation: differentiated variables map to jets,
/// parameters to constants.
class JetScope {
 public:
  JetScope(std::size_t nvars, int order) : nvars_(nvars), order_(order) {}
  JetScope& bind(std::string name, Jet value);
  JetScope& bind_param(std::string name, double value);
  JetScope& bind_params(const ParamMap& params);

  std::size_t nvars() const noexcept { return nvars_; }
  int order() const noexcept { return order_; }
  /// Throws Error(InvalidArgument) for an unbound name.
  Jet lookup(std::string_view name) const;

 private:
  std::size_t nvars_;
  int order_;
  std::vector<std::pair<std::string, Jet>> jets_;
  ParamMap params_;
};

/// Evaluates `expr` with jet arithmetic. Throws DomainError naming the
/// offending subtree on log/sqrt/pow of an invalid argument, division by zero,
/// or a non-finite intermediate.
Jet evaluate(const Expression& expr, const JetScope& scope);

/// Value and all partials up to `max_order` with respect to `vars` (in order) at `values`.
Jet eval_jet(const Expression& expr, std::span<const std::string> vars, std::span<const double> values,
             int max_order, const ParamMap& params = {});

/// Plain value at a point.
double eval_value(const Expression& expr, std::span<const std::string> vars, std::span<const double> values,
                  const ParamMap& params = {});

}  // namespace solgeom
