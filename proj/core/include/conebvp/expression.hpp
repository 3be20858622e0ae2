#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "conebvp/errors.hpp"

namespace conebvp {

/// Closed-form scalar expression in the variables t and u.
///
/// Grammar (recursive descent): + - * / ^ (right-associative power),
/// unary minus, parentheses, exp(x), log(x), and the constants pi and e.
/// This is exactly the operator set the catalog nonlinearities need.
class Expression {
 public:
  /// Throws ParseError with a character position on malformed input.
  static Expression parse(std::string_view src);

  double eval(double t, double u) const;
  const std::string& source() const { return source_; }

 private:
  enum class Op : unsigned char {
    Num, VarT, VarU, Add, Sub, Mul, Div, Pow, Neg, Exp, Log
  };
  struct Node {
    Op op;
    int lhs = -1;
    int rhs = -1;
    double value = 0.0;
  };

  double eval_node(int idx, double t, double u) const;

  std::string source_;
  std::vector<Node> nodes_;
  int root_ = -1;

  friend class ExpressionParser;
};

}  // namespace conebvp
