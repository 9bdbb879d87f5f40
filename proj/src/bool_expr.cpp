#include "revbcd/bool_expr.hpp"

#include <cctype>

#include "revbcd/errors.hpp"

namespace revbcd {

class BoolExpr::Parser {
 public:
  Parser(BoolExpr& expr, std::string_view text) : expr_(expr), text_(text) {}

  std::int32_t parse() {
    std::int32_t root = parse_or();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExpressionError("expression '" + std::string(text_) + "' at offset " +
                          std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::int32_t add(Op op, std::uint32_t value, std::int32_t lhs = -1, std::int32_t rhs = -1) {
    expr_.nodes_.push_back(Node{op, value, lhs, rhs});
    return static_cast<std::int32_t>(expr_.nodes_.size() - 1);
  }

  std::int32_t parse_or() {
    std::int32_t lhs = parse_xor();
    while (peek() == '+') {
      ++pos_;
      lhs = add(Op::bit_or, 0, lhs, parse_xor());
    }
    return lhs;
  }

  std::int32_t parse_xor() {
    std::int32_t lhs = parse_and();
    while (peek() == '^') {
      ++pos_;
      lhs = add(Op::bit_xor, 0, lhs, parse_and());
    }
    return lhs;
  }

  static bool starts_unary(char c) {
    return (c >= 'A' && c <= 'Z') || c == '0' || c == '1' || c == '(' || c == '~' || c == '!';
  }

  std::int32_t parse_and() {
    std::int32_t lhs = parse_unary();
    for (;;) {
      char c = peek();
      if (c == '&' || c == '*' || c == '.') {
        ++pos_;
      } else if (!starts_unary(c)) {
        break;
      }
      lhs = add(Op::bit_and, 0, lhs, parse_unary());
    }
    return lhs;
  }

  std::int32_t parse_unary() {
    char c = peek();
    if (c == '~' || c == '!') {
      ++pos_;
      return add(Op::bit_not, 0, parse_unary());
    }
    std::int32_t node = parse_atom();
    while (peek() == '\'') {
      ++pos_;
      node = add(Op::bit_not, 0, node);
    }
    return node;
  }

  std::int32_t parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      std::int32_t inner = parse_or();
      if (peek() != ')') {
        fail("expected ')'");
      }
      ++pos_;
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return add(Op::constant, c == '1' ? 1U : 0U);
    }
    if (c >= 'A' && c <= 'Z') {
      auto index = static_cast<unsigned>(c - 'A');
      if (index >= expr_.arity_) {
        fail("variable " + std::string(1, c) + " is not an input of a " +
             std::to_string(expr_.arity_) + "-input gate");
      }
      ++pos_;
      return add(Op::var, index);
    }
    if (c == '\0') {
      fail("unexpected end of expression");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  BoolExpr& expr_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

BoolExpr BoolExpr::parse(std::string_view text, unsigned arity) {
  if (arity < 1 || arity > 16) {
    throw ExpressionError("expression arity must be in [1,16]");
  }
  BoolExpr expr;
  expr.text_ = std::string(text);
  expr.arity_ = arity;
  Parser parser(expr, text);
  expr.root_ = parser.parse();
  return expr;
}

bool BoolExpr::eval(std::uint32_t input_word) const { return eval_node(root_, input_word); }

bool BoolExpr::eval_node(std::int32_t index, std::uint32_t word) const {
  const Node& n = nodes_[static_cast<std::size_t>(index)];
  switch (n.op) {
    case Op::var:
      return ((word >> (arity_ - 1 - n.value)) & 1U) != 0;
    case Op::constant:
      return n.value != 0;
    case Op::bit_not:
      return !eval_node(n.lhs, word);
    case Op::bit_and:
      return eval_node(n.lhs, word) && eval_node(n.rhs, word);
    case Op::bit_xor:
      return eval_node(n.lhs, word) != eval_node(n.rhs, word);
    case Op::bit_or:
      return eval_node(n.lhs, word) || eval_node(n.rhs, word);
  }
  return false;
}

}  // namespace revbcd
