#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "revbcd/bit_word.hpp"
#include "revbcd/truth_table.hpp"

namespace revbcd {

// A named reversible gate: an n-input/n-output bijection with a quantum cost
// and a fixed delay of one gate level. Copies share the underlying table.
class GateDef {
 public:
  // Throws NotBijective if `table` is not a permutation.
  GateDef(std::string name, TruthTable table, std::uint64_t cost = 0,
          std::vector<std::string> functions = {});

  const std::string& name() const noexcept { return name_; }
  unsigned arity() const noexcept { return table_->arity(); }
  const TruthTable& table() const noexcept { return *table_; }
  std::uint64_t cost() const noexcept { return cost_; }
  static constexpr unsigned delay() noexcept { return 1; }

  // Output switching functions as written at definition, one per output pin.
  // Empty for gates built directly from a table.
  const std::vector<std::string>& functions() const noexcept { return functions_; }

  std::uint32_t apply_word(std::uint32_t input) const { return (*table_)(input); }

 private:
  std::string name_;
  std::shared_ptr<const TruthTable> table_;
  std::uint64_t cost_;
  std::vector<std::string> functions_;
};

// Evaluates `outputs` (one expression per output pin, see BoolExpr) over all
// 2^arity inputs. Throws BadArity, ExpressionError or NotBijective.
GateDef make_gate(std::string name, unsigned arity, const std::vector<std::string>& outputs,
                  std::uint64_t cost = 0);

// Throws WidthMismatch when input.width() != gate.arity().
BitWord apply(const GateDef& gate, const BitWord& input);

// Gate realizing the inverse permutation, named "<name>^-1".
GateDef inverse(const GateDef& gate);

class GateCatalog {
 public:
  GateCatalog() = default;
  explicit GateCatalog(std::vector<GateDef> gates);

  // Throws DuplicateGateName.
  void add(GateDef gate);

  const GateDef* find(std::string_view name) const noexcept;
  // Throws UnknownGateName.
  const GateDef& at(std::string_view name) const;

  std::size_t size() const noexcept { return gates_.size(); }
  auto begin() const noexcept { return gates_.begin(); }
  auto end() const noexcept { return gates_.end(); }

 private:
  std::vector<GateDef> gates_;
};

// FG, FRG, TG, NG, PG, HNG and SCL, with costs from default_cost_table().
const GateCatalog& builtin_catalog();

}  // namespace revbcd
