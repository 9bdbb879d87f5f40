#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace revbcd {

// Switching function over the positional gate inputs A, B, C, ... (A is the
// most significant bit of an input word).
//
// Grammar, loosest to tightest binding:
//   expr  := xor ('+' xor)*              OR
//   xor   := and ('^' and)*              XOR
//   and   := unary (['&' | '*' | '.'] unary)*   AND, juxtaposition allowed
//   unary := ('~' | '!') unary | atom '\''*      complement
//   atom  := 'A'..'P' | '0' | '1' | '(' expr ')'
class BoolExpr {
 public:
  // Throws ExpressionError on syntax errors or variables beyond `arity`.
  static BoolExpr parse(std::string_view text, unsigned arity);

  bool eval(std::uint32_t input_word) const;

  const std::string& text() const noexcept { return text_; }
  unsigned arity() const noexcept { return arity_; }

 private:
  enum class Op : std::uint8_t { var, constant, bit_not, bit_and, bit_xor, bit_or };
  struct Node {
    Op op;
    std::uint32_t value;  // variable index or constant
    std::int32_t lhs;
    std::int32_t rhs;
  };

  class Parser;

  bool eval_node(std::int32_t index, std::uint32_t word) const;

  std::string text_;
  unsigned arity_ = 0;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

}  // namespace revbcd
