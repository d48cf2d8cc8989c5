// SPDX-License-Identifier: Apache-2.0
#include "mcal/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace mcal {

namespace {

ExprPtr make_literal(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::literal;
  e->literal = v;
  return e;
}

ExprPtr make_variable(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::variable;
  e->name = std::move(name);
  return e;
}

ExprPtr make_negate(ExprPtr inner) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::negate;
  e->lhs = std::move(inner);
  return e;
}

ExprPtr make_binary(Expr::BinOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::binary;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr make_call(Expr::Func func, ExprPtr arg) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::call;
  e->func = func;
  e->lhs = std::move(arg);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(parse_errc::syntax,
         what + " at position " + std::to_string(pos_ + 1) + " in expression '" +
             std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<char> peek() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (eat('+'))
        e = make_binary(Expr::BinOp::add, std::move(e), term());
      else if (eat('-'))
        e = make_binary(Expr::BinOp::sub, std::move(e), term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (true) {
      if (eat('*'))
        e = make_binary(Expr::BinOp::mul, std::move(e), unary());
      else if (eat('/'))
        e = make_binary(Expr::BinOp::div, std::move(e), unary());
      else
        return e;
    }
  }

  ExprPtr unary() {
    if (eat('-')) return make_negate(unary());
    return power();
  }

  ExprPtr power() {
    ExprPtr e = primary();
    while (eat('^')) e = make_binary(Expr::BinOp::pow, std::move(e), primary());
    return e;
  }

  ExprPtr primary() {
    const auto c = peek();
    if (!c) error("unexpected end of expression");
    if (*c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!eat(')')) error("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(*c)) || *c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(*c)) || *c == '_') return name_or_call();
    error(std::string("unexpected character '") + *c + "'");
  }

  ExprPtr number() {
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      } else {
        pos_ = mark;  // 'e' belongs to something else; not part of the number
      }
    }
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      error("malformed number literal");
    }
    return make_literal(value);
  }

  ExprPtr name_or_call() {
    const size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (peek() == '(') {
      Expr::Func func;
      if (name == "log")
        func = Expr::Func::log;
      else if (name == "exp")
        func = Expr::Func::exp;
      else if (name == "sqrt")
        func = Expr::Func::sqrt;
      else {
        pos_ = start;
        error("unknown function '" + name + "'");
      }
      eat('(');
      ExprPtr arg = expr();
      if (!eat(')')) error("expected ')'");
      return make_call(func, std::move(arg));
    }
    return make_variable(std::move(name));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

void collect_variables(const Expr& e, std::vector<std::string>& out) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return;
    case Expr::Kind::variable:
      if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
      return;
    case Expr::Kind::negate:
    case Expr::Kind::call:
      collect_variables(*e.lhs, out);
      return;
    case Expr::Kind::binary:
      collect_variables(*e.lhs, out);
      collect_variables(*e.rhs, out);
      return;
  }
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::vector<std::string> free_variables(const Expr& e) {
  std::vector<std::string> out;
  collect_variables(e, out);
  return out;
}

double eval_expr(const Expr& e,
                 const std::function<std::optional<double>(std::string_view)>& binding) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return e.literal;
    case Expr::Kind::variable: {
      const auto v = binding(e.name);
      if (!v) fail(errc::unbound_variable, "variable '" + e.name + "' is not bound");
      return *v;
    }
    case Expr::Kind::negate:
      return -eval_expr(*e.lhs, binding);
    case Expr::Kind::call: {
      const double x = eval_expr(*e.lhs, binding);
      switch (e.func) {
        case Expr::Func::log:
          if (!(x > 0.0))
            fail(errc::mapping_domain, "log of nonpositive value " + std::to_string(x));
          return std::log(x);
        case Expr::Func::exp:
          return std::exp(x);
        case Expr::Func::sqrt:
          if (x < 0.0)
            fail(errc::mapping_domain, "sqrt of negative value " + std::to_string(x));
          return std::sqrt(x);
      }
      break;
    }
    case Expr::Kind::binary: {
      const double a = eval_expr(*e.lhs, binding);
      const double b = eval_expr(*e.rhs, binding);
      switch (e.op) {
        case Expr::BinOp::add:
          return a + b;
        case Expr::BinOp::sub:
          return a - b;
        case Expr::BinOp::mul:
          return a * b;
        case Expr::BinOp::div:
          if (b == 0.0) fail(errc::mapping_domain, "division by zero");
          return a / b;
        case Expr::BinOp::pow: {
          const double r = std::pow(a, b);
          if (std::isnan(r))
            fail(errc::mapping_domain, "pow(" + std::to_string(a) + ", " + std::to_string(b) +
                                           ") has no real value");
          return r;
        }
      }
      break;
    }
  }
  fail(errc::invalid_config, "malformed expression node");
}

ExprMapping::ExprMapping(std::vector<std::string> inputs,
                         std::vector<std::pair<std::string, std::string>> outputs)
    : inputs_(std::move(inputs)) {
  if (outputs.empty()) fail(errc::invalid_config, "mapping needs at least one output");
  for (auto& [name, source] : outputs) {
    ExprPtr e = parse_expr(source);
    for (const auto& var : free_variables(*e))
      if (std::find(inputs_.begin(), inputs_.end(), var) == inputs_.end())
        fail(errc::unbound_variable,
             "expression for '" + name + "' uses '" + var + "' which is not an input");
    output_names_.push_back(name);
    exprs_.push_back(std::move(e));
  }
}

Eigen::VectorXd ExprMapping::apply(const Eigen::VectorXd& point) const {
  if (point.size() != static_cast<Eigen::Index>(inputs_.size()))
    fail(errc::length_mismatch, "point dimension does not match mapping inputs");
  const auto binding = [&](std::string_view name) -> std::optional<double> {
    for (size_t i = 0; i < inputs_.size(); ++i)
      if (inputs_[i] == name) return point(static_cast<Eigen::Index>(i));
    return std::nullopt;
  };
  Eigen::VectorXd out(static_cast<Eigen::Index>(exprs_.size()));
  for (size_t i = 0; i < exprs_.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = eval_expr(*exprs_[i], binding);
  return out;
}

}  // namespace mcal
