#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revbcd/netlist.hpp"

namespace revbcd {

struct VerifyReport {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  // First few mismatches in enumeration order (a, then b, then cin).
  std::vector<std::string> failure_samples;

  bool passed() const noexcept { return failures == 0; }
};

// Exhaustively compares a BCD adder laid out like build_bcd_adder_n(digits)
// with the chained decimal oracle over every valid digit combination and both
// carry-in values. The a-operand range is split across `workers` threads
// (0 = hardware concurrency); the report does not depend on the split.
// Throws WidthMismatch if the circuit's port counts do not fit `digits`.
VerifyReport verify_bcd_adder(const Circuit& circuit, unsigned digits, unsigned workers = 0,
                              std::size_t max_samples = 10);

}  // namespace revbcd
