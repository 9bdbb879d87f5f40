#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace revbcd {

// Per-gate quantum cost. Text form, one entry per line:
//
//   # comment
//   <gate-name> <nonnegative-integer>
class CostTable {
 public:
  CostTable() = default;

  // Throws ParseError (syntax or duplicate_name).
  static CostTable parse(std::string_view text);
  // Throws std::runtime_error if the file cannot be read, ParseError otherwise.
  static CostTable load(const std::filesystem::path& path);

  void set(std::string name, std::uint64_t cost) { costs_[std::move(name)] = cost; }
  bool contains(std::string_view name) const { return costs_.find(name) != costs_.end(); }
  // Throws UnknownGateCost.
  std::uint64_t cost_of(std::string_view name) const;

  const std::map<std::string, std::uint64_t, std::less<>>& entries() const noexcept {
    return costs_;
  }

 private:
  std::map<std::string, std::uint64_t, std::less<>> costs_;
};

// Text of the shipped default table (also installed as data/default_costs.txt).
std::string_view default_cost_table_text();
const CostTable& default_cost_table();

}  // namespace revbcd
