#include "conebvp/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace conebvp {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view src, Expression& out)
      : src_(src), out_(out) {}

  void run() {
    out_.root_ = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
  }

 private:
  using Op = Expression::Op;

  void fail(const std::string& what) const {
    throw ParseError("expression parse error at position " +
                     std::to_string(pos_) + ": " + what + " in '" +
                     std::string(src_) + "'");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  int add(Op op, int lhs = -1, int rhs = -1, double v = 0.0) {
    out_.nodes_.push_back({op, lhs, rhs, v});
    return static_cast<int>(out_.nodes_.size()) - 1;
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      if (eat('+')) lhs = add(Op::Add, lhs, parse_term());
      else if (eat('-')) lhs = add(Op::Sub, lhs, parse_term());
      else return lhs;
    }
  }

  int parse_term() {
    int lhs = parse_factor();
    for (;;) {
      if (eat('*')) lhs = add(Op::Mul, lhs, parse_factor());
      else if (eat('/')) lhs = add(Op::Div, lhs, parse_factor());
      else return lhs;
    }
  }

  int parse_factor() {
    int base = parse_unary();
    if (eat('^')) return add(Op::Pow, base, parse_factor());
    return base;
  }

  int parse_unary() {
    if (eat('-')) return add(Op::Neg, parse_unary());
    if (eat('+')) return parse_unary();
    return parse_primary();
  }

  int parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    if (eat('(')) {
      int inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
    return -1;
  }

  int parse_number() {
    const char* begin = src_.data() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<size_t>(end - begin);
    return add(Op::Num, -1, -1, v);
  }

  int parse_name() {
    size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isalpha(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    std::string_view name = src_.substr(start, pos_ - start);
    if (name == "t") return add(Op::VarT);
    if (name == "u") return add(Op::VarU);
    if (name == "pi") return add(Op::Num, -1, -1, std::numbers::pi);
    if (name == "e") return add(Op::Num, -1, -1, std::numbers::e);
    if (name == "exp" || name == "log") {
      if (!eat('(')) fail("expected '(' after function name");
      int arg = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return add(name == "exp" ? Op::Exp : Op::Log, arg);
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
    return -1;
  }

  std::string_view src_;
  Expression& out_;
  size_t pos_ = 0;
};

Expression Expression::parse(std::string_view src) {
  Expression e;
  e.source_ = std::string(src);
  ExpressionParser(src, e).run();
  return e;
}

double Expression::eval_node(int idx, double t, double u) const {
  const Node& n = nodes_[static_cast<size_t>(idx)];
  switch (n.op) {
    case Op::Num: return n.value;
    case Op::VarT: return t;
    case Op::VarU: return u;
    case Op::Add: return eval_node(n.lhs, t, u) + eval_node(n.rhs, t, u);
    case Op::Sub: return eval_node(n.lhs, t, u) - eval_node(n.rhs, t, u);
    case Op::Mul: return eval_node(n.lhs, t, u) * eval_node(n.rhs, t, u);
    case Op::Div: return eval_node(n.lhs, t, u) / eval_node(n.rhs, t, u);
    case Op::Pow:
      return std::pow(eval_node(n.lhs, t, u), eval_node(n.rhs, t, u));
    case Op::Neg: return -eval_node(n.lhs, t, u);
    case Op::Exp: return std::exp(eval_node(n.lhs, t, u));
    case Op::Log: return std::log(eval_node(n.lhs, t, u));
  }
  return 0.0;
}

double Expression::eval(double t, double u) const {
  return eval_node(root_, t, u);
}

}  // namespace conebvp
