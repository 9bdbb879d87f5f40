#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace revbcd {

inline constexpr unsigned kMaxArity = 16;

// Total map from n-bit input words to n-bit output words, stored as 2^n rows
// indexed by the packed input (first input line = most significant bit).
class TruthTable {
 public:
  // Throws BadArity for arity outside [1, kMaxArity], std::invalid_argument
  // when rows.size() != 2^arity or a row does not fit in `arity` bits.
  TruthTable(unsigned arity, std::vector<std::uint32_t> rows);

  static TruthTable identity(unsigned arity);

  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return rows_.size(); }
  std::uint32_t operator()(std::uint32_t input) const { return rows_[input]; }
  std::span<const std::uint32_t> rows() const noexcept { return rows_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned arity_;
  std::vector<std::uint32_t> rows_;
};

// True iff every output word occurs exactly once.
bool is_bijective(const TruthTable& table);

}  // namespace revbcd
