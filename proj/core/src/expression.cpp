#include "wptk/expression.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

#include "wptk/error.hpp"

namespace wptk {

struct Expression::Node {
  enum class Kind { Number, VarT, VarX, Neg, Add, Sub, Mul, Div, Pow, Sqrt, Sin, Cos, Exp };
  Kind kind = Kind::Number;
  double number = 0.0;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

namespace {

using Node = Expression::Node;
using Kind = Node::Kind;

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  std::unique_ptr<Node> parse() {
    auto n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigurationError("expression: " + what + " at position " + std::to_string(pos_) +
                             " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<Node> make(Kind k, std::unique_ptr<Node> a = nullptr,
                                    std::unique_ptr<Node> b = nullptr) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  std::unique_ptr<Node> expr() {
    auto n = term();
    for (;;) {
      if (eat('+')) {
        n = make(Kind::Add, std::move(n), term());
      } else if (eat('-')) {
        n = make(Kind::Sub, std::move(n), term());
      } else {
        return n;
      }
    }
  }

  std::unique_ptr<Node> term() {
    auto n = unary();
    for (;;) {
      if (eat('*')) {
        n = make(Kind::Mul, std::move(n), unary());
      } else if (eat('/')) {
        n = make(Kind::Div, std::move(n), unary());
      } else {
        return n;
      }
    }
  }

  std::unique_ptr<Node> unary() {
    if (eat('-')) return make(Kind::Neg, unary());
    if (eat('+')) return unary();
    return power();
  }

  std::unique_ptr<Node> power() {
    auto base = primary();
    if (eat('^')) return make(Kind::Pow, std::move(base), unary());
    return base;
  }

  std::unique_ptr<Node> primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - begin);
      auto n = make(Kind::Number);
      n->number = v;
      return n;
    }
    if (eat('(')) {
      auto n = expr();
      if (!eat(')')) fail("expected ')'");
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string id = s_.substr(pos_, end - pos_);
      pos_ = end;
      if (id == "t") return make(Kind::VarT);
      if (id == "x") return make(Kind::VarX);
      Kind k;
      if (id == "sqrt") {
        k = Kind::Sqrt;
      } else if (id == "sin") {
        k = Kind::Sin;
      } else if (id == "cos") {
        k = Kind::Cos;
      } else if (id == "exp") {
        k = Kind::Exp;
      } else {
        pos_ -= id.size();
        fail("unknown identifier '" + id + "'");
      }
      if (!eat('(')) fail("expected '(' after " + id);
      auto arg = expr();
      if (!eat(')')) fail("expected ')'");
      return make(k, std::move(arg));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

Jet eval(const Node& n, double t, double x, int order) {
  switch (n.kind) {
    case Kind::Number:
      return Jet::constant(n.number, order);
    case Kind::VarT:
      return Jet::constant(t, order);
    case Kind::VarX:
      return Jet::variable(x, order);
    case Kind::Neg:
      return -eval(*n.lhs, t, x, order);
    case Kind::Add:
      return eval(*n.lhs, t, x, order) + eval(*n.rhs, t, x, order);
    case Kind::Sub:
      return eval(*n.lhs, t, x, order) - eval(*n.rhs, t, x, order);
    case Kind::Mul:
      return eval(*n.lhs, t, x, order) * eval(*n.rhs, t, x, order);
    case Kind::Div:
      return eval(*n.lhs, t, x, order) / eval(*n.rhs, t, x, order);
    case Kind::Pow:
      return pow(eval(*n.lhs, t, x, order), eval(*n.rhs, t, x, order));
    case Kind::Sqrt:
      return sqrt(eval(*n.lhs, t, x, order));
    case Kind::Sin:
      return sin(eval(*n.lhs, t, x, order));
    case Kind::Cos:
      return cos(eval(*n.lhs, t, x, order));
    case Kind::Exp:
      return exp(eval(*n.lhs, t, x, order));
  }
  return Jet::constant(0.0, order);
}

bool uses_t(const Node& n) {
  if (n.kind == Kind::VarT) return true;
  return (n.lhs && uses_t(*n.lhs)) || (n.rhs && uses_t(*n.rhs));
}

}  // namespace

Expression::Expression(std::string text, std::shared_ptr<const Node> root)
    : text_(std::move(text)), root_(std::move(root)) {}

Expression Expression::parse(const std::string& text) {
  Parser p(text);
  std::shared_ptr<const Node> root = p.parse();
  return Expression(text, std::move(root));
}

bool Expression::depends_on_t() const { return uses_t(*root_); }

double Expression::evaluate(double t, double x) const { return eval(*root_, t, x, 0).value(); }

Jet Expression::evaluate_jet(double t, double x, int order) const {
  return eval(*root_, t, x, order);
}

}  // namespace wptk
