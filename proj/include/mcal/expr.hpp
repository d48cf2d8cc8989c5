// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcal/errors.hpp"

namespace mcal {

/// Arithmetic expression over named real variables.
///
/// Grammar (binaries left-associative, '^' binds tightest, then unary minus,
/// then '*' '/', then '+' '-'):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' primary)*
///   primary := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'
/// Functions: log, exp, sqrt.
class Expr {
 public:
  enum class Kind { literal, variable, negate, binary, call };
  enum class BinOp { add, sub, mul, div, pow };
  enum class Func { log, exp, sqrt };

  Kind kind;
  double literal = 0.0;
  std::string name;  // variable name
  BinOp op = BinOp::add;
  Func func = Func::log;
  std::shared_ptr<const Expr> lhs, rhs;  // negate/call use lhs only
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses the grammar above; any other byte sequence yields a ParseError
/// carrying the 1-based offending position.
ExprPtr parse_expr(std::string_view text);

/// Free variable names in first-appearance order.
std::vector<std::string> free_variables(const Expr& e);

/// IEEE double evaluation. Division by zero, log of a nonpositive value,
/// sqrt of a negative value, and a pow yielding NaN raise MappingDomainError
/// instead of propagating non-finite values; unbound names raise
/// UnboundVariable.
double eval_expr(const Expr& e,
                 const std::function<std::optional<double>(std::string_view)>& binding);

/// An analytic mapping from named input coordinates to named outputs, each
/// output defined by an expression over the inputs.
class ExprMapping {
 public:
  ExprMapping(std::vector<std::string> inputs,
              std::vector<std::pair<std::string, std::string>> outputs);

  const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  const std::vector<std::string>& output_names() const noexcept { return output_names_; }
  const std::vector<ExprPtr>& output_exprs() const noexcept { return exprs_; }

  /// Applies every output expression to one input point.
  Eigen::VectorXd apply(const Eigen::VectorXd& point) const;

 private:
  std::vector<std::string> inputs_;
  std::vector<std::string> output_names_;
  std::vector<ExprPtr> exprs_;
};

}  // namespace mcal
