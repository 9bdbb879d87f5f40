#include "revbcd/truth_table.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "revbcd/errors.hpp"

namespace revbcd {

TruthTable::TruthTable(unsigned arity, std::vector<std::uint32_t> rows)
    : arity_(arity), rows_(std::move(rows)) {
  if (arity_ < 1 || arity_ > kMaxArity) {
    throw BadArity("arity must be in [1," + std::to_string(kMaxArity) + "], got " +
                   std::to_string(arity_));
  }
  const std::size_t expected = std::size_t{1} << arity_;
  if (rows_.size() != expected) {
    throw std::invalid_argument("truth table of arity " + std::to_string(arity_) + " needs " +
                                std::to_string(expected) + " rows, got " +
                                std::to_string(rows_.size()));
  }
  for (std::uint32_t out : rows_) {
    if (out >= expected) {
      throw std::invalid_argument("truth table row " + std::to_string(out) +
                                  " does not fit in " + std::to_string(arity_) + " bits");
    }
  }
}

TruthTable TruthTable::identity(unsigned arity) {
  if (arity < 1 || arity > kMaxArity) {
    throw BadArity("arity must be in [1," + std::to_string(kMaxArity) + "]");
  }
  std::vector<std::uint32_t> rows(std::size_t{1} << arity);
  std::iota(rows.begin(), rows.end(), 0U);
  return TruthTable(arity, std::move(rows));
}

bool is_bijective(const TruthTable& table) {
  std::vector<bool> seen(table.size(), false);
  for (std::uint32_t out : table.rows()) {
    if (seen[out]) {
      return false;
    }
    seen[out] = true;
  }
  return true;
}

}  // namespace revbcd
