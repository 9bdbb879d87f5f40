#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "revbcd/bit_word.hpp"
#include "revbcd/netlist.hpp"

namespace revbcd {

class BcdDigit {
 public:
  // Throws std::out_of_range outside [0, 9].
  explicit BcdDigit(int value) : value_(value) {
    if (value < 0 || value > 9) {
      throw std::out_of_range("BCD digit must be in [0,9], got " + std::to_string(value));
    }
  }
  int value() const noexcept { return value_; }
  friend bool operator==(const BcdDigit&, const BcdDigit&) = default;

 private:
  int value_;
};

struct BcdSum {
  Bit cout;
  BcdDigit sum;
  friend bool operator==(const BcdSum&, const BcdSum&) = default;
};

// Plain decimal addition; no circuit involved.
BcdSum oracle_bcd_add(BcdDigit a, BcdDigit b, Bit cin);

struct BcdNumberSum {
  Bit cout;
  std::vector<BcdDigit> digits;  // most significant first
  friend bool operator==(const BcdNumberSum&, const BcdNumberSum&) = default;
};

// Chains oracle_bcd_add from the least significant digit. Operands are
// most-significant-digit first and must have equal length.
BcdNumberSum oracle_bcd_add(std::span<const BcdDigit> a, std::span<const BcdDigit> b, Bit cin);

struct BcdCase {
  BcdDigit a;
  BcdDigit b;
  Bit cin;
  Bit expected_cout;
  BcdDigit expected_sum;
};

// All 10 * 10 * 2 one-digit cases.
std::vector<BcdCase> all_bcd_cases();

// Decimal carry as sum of products: S3 S2 + S3 S1 + C4.
Bit eval_correction_eq1(Bit s3, Bit s2, Bit s1, Bit c4);
// XOR form: C4 ^ S3 (S2 + S1). Agrees with the sum-of-products form whenever
// C4 and S3 (S2 + S1) are not both set, which holds for every valid BCD sum.
Bit eval_correction_eq2(Bit s3, Bit s2, Bit s1, Bit c4);

inline constexpr std::string_view kStageAdder1 = "adder1";
inline constexpr std::string_view kStageCorrection = "correction";
inline constexpr std::string_view kStageAdder2 = "adder2";

// One HNG with D tied to 0. Inputs a, b, cin; outputs sum, carry.
Circuit build_full_adder();

// Four chained HNG full adders. Inputs a3..a0 b3..b0 cin; outputs c4 s3..s0.
Circuit build_ripple_adder4();

// One-digit BCD adder: ripple adder, SCL decimal-carry stage, then the
// add-six stage (PG, HNG, FG). Inputs a3..a0 b3..b0 cin; outputs cout s3..s0.
// Instances are tagged adder1 / correction / adder2.
Circuit build_bcd_adder_digit();

inline constexpr unsigned kMaxBcdDigits = 4;

// `digits` one-digit blocks with the decimal carry rippling between them.
// Inputs a(4n-1)..a0 b(4n-1)..b0 cin; outputs cout s(4n-1)..s0. For n > 1
// instance tags are prefixed "digit<i>/" with digit 0 least significant.
// Throws BadDigitCount outside [1, kMaxBcdDigits].
Circuit build_bcd_adder_n(unsigned digits);

// Packs operands into the input word of build_bcd_adder_n(digits).
BitWord encode_bcd_inputs(std::uint64_t a, std::uint64_t b, Bit cin, unsigned digits);

struct ReferenceRow {
  std::string_view design_label;
  std::uint64_t adder1_gates;
  std::uint64_t adder1_garbage;
  std::uint64_t correction_gates;
  std::uint64_t correction_garbage;
  std::uint64_t adder2_gates;
  std::uint64_t adder2_garbage;
  std::uint64_t total_gates;
  std::uint64_t total_garbage;
  std::uint64_t total_constants;
  std::uint64_t total_delay;
  std::string_view note;
};

// Published comparison rows, stored verbatim (totals are not recomputed).
std::span<const ReferenceRow> reference_table();
const ReferenceRow& proposed_reference_row();

}  // namespace revbcd
