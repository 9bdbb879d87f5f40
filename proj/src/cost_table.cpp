#include "revbcd/cost_table.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "revbcd/errors.hpp"

namespace revbcd {

namespace {

// Keep in sync with data/default_costs.txt; a test compares the two.
constexpr std::string_view kDefaultCosts =
    R"(# Default quantum costs for the built-in gate catalog.
#
# PLACEHOLDER COSTS. The BCD adder design gives no per-gate quantum costs.
# FG, TG, FRG and PG carry values commonly used in the reversible-logic
# literature. NG, HNG and SCL are PLACEHOLDERS chosen only so
# that the quantum-cost metric is computable; replace them with a cost file of
# your own (--costs FILE) before drawing conclusions from quantum cost.
FG 1
TG 5
FRG 5
PG 4
NG 5    # placeholder
HNG 6   # placeholder
SCL 7   # placeholder
)";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

CostTable CostTable::parse(std::string_view text) {
  CostTable table;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    // (token, 1-based column)
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (is_space(line[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) {
        ++j;
      }
      tokens.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }
    if (tokens.empty()) {
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(ParseError::Kind::syntax, line_no, tokens.front().second,
                       "expected '<gate-name> <cost>'");
    }
    auto [name, name_col] = tokens[0];
    auto [number, number_col] = tokens[1];
    std::uint64_t cost = 0;
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), cost);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
      throw ParseError(ParseError::Kind::syntax, line_no, number_col,
                       "cost must be a nonnegative integer, got '" + std::string(number) + "'");
    }
    if (table.contains(name)) {
      throw ParseError(ParseError::Kind::duplicate_name, line_no, name_col,
                       "duplicate cost entry for '" + std::string(name) + "'");
    }
    table.set(std::string(name), cost);
  }
  return table;
}

CostTable CostTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read cost table '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::uint64_t CostTable::cost_of(std::string_view name) const {
  auto it = costs_.find(name);
  if (it == costs_.end()) {
    throw UnknownGateCost("no quantum cost configured for gate '" + std::string(name) + "'");
  }
  return it->second;
}

std::string_view default_cost_table_text() { return kDefaultCosts; }

const CostTable& default_cost_table() {
  static const CostTable table = CostTable::parse(kDefaultCosts);
  return table;
}

}  // namespace revbcd
