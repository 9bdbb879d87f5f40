#include "revbcd/gate.hpp"

#include <algorithm>

#include "revbcd/bool_expr.hpp"
#include "revbcd/cost_table.hpp"
#include "revbcd/errors.hpp"

namespace revbcd {

GateDef::GateDef(std::string name, TruthTable table, std::uint64_t cost,
                 std::vector<std::string> functions)
    : name_(std::move(name)),
      table_(std::make_shared<const TruthTable>(std::move(table))),
      cost_(cost),
      functions_(std::move(functions)) {
  if (!is_bijective(*table_)) {
    throw NotBijective("gate '" + name_ + "' is not reversible: two inputs share an output");
  }
  if (!functions_.empty() && functions_.size() != table_->arity()) {
    throw BadArity("gate '" + name_ + "' lists " + std::to_string(functions_.size()) +
                   " output functions for arity " + std::to_string(table_->arity()));
  }
}

GateDef make_gate(std::string name, unsigned arity, const std::vector<std::string>& outputs,
                  std::uint64_t cost) {
  if (arity < 1 || arity > kMaxArity) {
    throw BadArity("gate '" + name + "': arity must be in [1," + std::to_string(kMaxArity) +
                   "], got " + std::to_string(arity));
  }
  if (outputs.size() != arity) {
    throw BadArity("gate '" + name + "': " + std::to_string(outputs.size()) +
                   " output expressions for arity " + std::to_string(arity));
  }
  std::vector<BoolExpr> exprs;
  exprs.reserve(outputs.size());
  for (const std::string& text : outputs) {
    exprs.push_back(BoolExpr::parse(text, arity));
  }
  std::vector<std::uint32_t> rows(std::size_t{1} << arity);
  for (std::uint32_t in = 0; in < rows.size(); ++in) {
    std::uint32_t out = 0;
    for (const BoolExpr& e : exprs) {
      out = (out << 1) | (e.eval(in) ? 1U : 0U);
    }
    rows[in] = out;
  }
  return GateDef(std::move(name), TruthTable(arity, std::move(rows)), cost, outputs);
}

BitWord apply(const GateDef& gate, const BitWord& input) {
  if (input.width() != gate.arity()) {
    throw WidthMismatch("gate '" + gate.name() + "' expects " + std::to_string(gate.arity()) +
                        " input bits, got " + std::to_string(input.width()));
  }
  return BitWord::from_uint(gate.apply_word(static_cast<std::uint32_t>(input.to_uint())),
                            gate.arity());
}

GateDef inverse(const GateDef& gate) {
  const TruthTable& t = gate.table();
  std::vector<std::uint32_t> rows(t.size());
  for (std::uint32_t in = 0; in < t.size(); ++in) {
    rows[t(in)] = in;
  }
  return GateDef(gate.name() + "^-1", TruthTable(t.arity(), std::move(rows)), gate.cost());
}

GateCatalog::GateCatalog(std::vector<GateDef> gates) {
  for (GateDef& g : gates) {
    add(std::move(g));
  }
}

void GateCatalog::add(GateDef gate) {
  if (find(gate.name()) != nullptr) {
    throw DuplicateGateName("gate '" + gate.name() + "' is already in the catalog");
  }
  gates_.push_back(std::move(gate));
}

const GateDef* GateCatalog::find(std::string_view name) const noexcept {
  auto it = std::find_if(gates_.begin(), gates_.end(),
                         [&](const GateDef& g) { return g.name() == name; });
  return it == gates_.end() ? nullptr : &*it;
}

const GateDef& GateCatalog::at(std::string_view name) const {
  if (const GateDef* g = find(name)) {
    return *g;
  }
  throw UnknownGateName("unknown gate '" + std::string(name) + "'");
}

namespace {

struct CatalogEntry {
  const char* name;
  unsigned arity;
  std::vector<std::string> outputs;
};

GateCatalog make_builtin_catalog() {
  // Positional inputs A,B,C,D map to outputs P,Q,R,S.
  const std::vector<CatalogEntry> entries = {
      {"FG", 2, {"A", "A^B"}},
      {"FRG", 3, {"A", "A'B ^ AC", "A'C ^ AB"}},
      {"TG", 3, {"A", "B", "AB ^ C"}},
      {"NG", 3, {"A", "AB ^ C", "A'C' ^ B'"}},
      {"PG", 3, {"A", "A^B", "AB ^ C"}},
      {"HNG", 4, {"A", "B", "A^B^C", "(A^B)C ^ AB ^ D"}},
      // Six-correction logic: with (A,B,C,D) = (S1,S2,S3,C4) the last output
      // is the BCD decimal carry C4 ^ S3(S2 + S1).
      {"SCL", 4, {"A", "B", "C", "D ^ C(A + B)"}},
  };
  const CostTable& costs = default_cost_table();
  GateCatalog catalog;
  for (const CatalogEntry& e : entries) {
    catalog.add(make_gate(e.name, e.arity, e.outputs, costs.cost_of(e.name)));
  }
  return catalog;
}

}  // namespace

const GateCatalog& builtin_catalog() {
  static const GateCatalog catalog = make_builtin_catalog();
  return catalog;
}

}  // namespace revbcd
