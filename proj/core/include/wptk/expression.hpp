#pragma once

#include <memory>
#include <string>

#include "wptk/jet.hpp"

namespace wptk {

/// Arithmetic expression in t and x.
///
/// Grammar (precedence low to high):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' unary)?          right-associative
///   primary := number | 't' | 'x' | fn '(' expr ')' | '(' expr ')'
///   fn      := sqrt | sin | cos | exp
class Expression {
 public:
  /// Throws ConfigurationError with the offending position on a syntax error.
  static Expression parse(const std::string& text);

  const std::string& text() const { return text_; }

  /// True when the variable t occurs anywhere in the expression.
  bool depends_on_t() const;

  double evaluate(double t, double x) const;
  /// Taylor jet in x at (t, x) up to `order`.
  Jet evaluate_jet(double t, double x, int order) const;

  struct Node;

 private:
  Expression(std::string text, std::shared_ptr<const Node> root);
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace wptk
