#include "revbcd/designs.hpp"

#include <array>

namespace revbcd {

BcdSum oracle_bcd_add(BcdDigit a, BcdDigit b, Bit cin) {
  const int s = a.value() + b.value() + (is_set(cin) ? 1 : 0);
  if (s > 9) {
    return BcdSum{Bit::one, BcdDigit(s - 10)};
  }
  return BcdSum{Bit::zero, BcdDigit(s)};
}

BcdNumberSum oracle_bcd_add(std::span<const BcdDigit> a, std::span<const BcdDigit> b, Bit cin) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("BCD operands must have the same number of digits");
  }
  BcdNumberSum result{cin, std::vector<BcdDigit>(a.size(), BcdDigit(0))};
  for (std::size_t i = a.size(); i-- > 0;) {
    BcdSum d = oracle_bcd_add(a[i], b[i], result.cout);
    result.digits[i] = d.sum;
    result.cout = d.cout;
  }
  return result;
}

std::vector<BcdCase> all_bcd_cases() {
  std::vector<BcdCase> cases;
  cases.reserve(200);
  for (int a = 0; a <= 9; ++a) {
    for (int b = 0; b <= 9; ++b) {
      for (Bit cin : {Bit::zero, Bit::one}) {
        BcdSum s = oracle_bcd_add(BcdDigit(a), BcdDigit(b), cin);
        cases.push_back(BcdCase{BcdDigit(a), BcdDigit(b), cin, s.cout, s.sum});
      }
    }
  }
  return cases;
}

Bit eval_correction_eq1(Bit s3, Bit s2, Bit s1, Bit c4) {
  return to_bit((is_set(s3) && is_set(s2)) || (is_set(s3) && is_set(s1)) || is_set(c4));
}

Bit eval_correction_eq2(Bit s3, Bit s2, Bit s1, Bit c4) {
  return to_bit(is_set(c4) != (is_set(s3) && (is_set(s2) || is_set(s1))));
}

namespace {

// Bus index i holds bit i (least significant at 0).
using Nibble = std::array<WireRef, 4>;

struct RippleWires {
  WireRef carry;
  Nibble sum;
};

struct DigitWires {
  WireRef cout;
  Nibble sum;
};

std::string bit_label(char prefix, std::size_t bit) { return prefix + std::to_string(bit); }

std::vector<std::string> adder_input_labels(std::size_t bits) {
  std::vector<std::string> labels;
  for (char operand : {'a', 'b'}) {
    for (std::size_t i = bits; i-- > 0;) {
      labels.push_back(bit_label(operand, i));
    }
  }
  labels.push_back("cin");
  return labels;
}

Nibble nibble(const CircuitBuilder& b, char operand, std::size_t first_bit) {
  Nibble n{};
  for (std::size_t i = 0; i < 4; ++i) {
    n[i] = b.input(bit_label(operand, first_bit + i));
  }
  return n;
}

RippleWires append_ripple_adder(CircuitBuilder& b, const Nibble& x, const Nibble& y, WireRef cin,
                                const std::string& tag, const std::string& prefix) {
  const GateDef& hng = builtin_catalog().at("HNG");
  RippleWires out{cin, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    WireRef zero = b.add_constant(Bit::zero);
    b.name_wire(zero, prefix + "z" + std::to_string(i));
    auto pins = b.add_gate(hng, {x[i], y[i], out.carry, zero}, tag);
    b.name_wire(pins[0], prefix + "ga" + std::to_string(i));
    b.name_wire(pins[1], prefix + "gb" + std::to_string(i));
    b.name_wire(pins[2], prefix + "S" + std::to_string(i));
    b.name_wire(pins[3], prefix + "C" + std::to_string(i + 1));
    b.mark_garbage(pins[0]);
    b.mark_garbage(pins[1]);
    out.sum[i] = pins[2];
    out.carry = pins[3];
  }
  return out;
}

std::string stage_tag(const std::string& prefix, std::string_view stage) {
  return prefix + std::string(stage);
}

DigitWires append_bcd_digit(CircuitBuilder& b, const Nibble& x, const Nibble& y, WireRef cin,
                            const std::string& tag_prefix, const std::string& name_prefix) {
  const GateCatalog& gates = builtin_catalog();
  const std::string p = name_prefix;

  RippleWires binary =
      append_ripple_adder(b, x, y, cin, stage_tag(tag_prefix, kStageAdder1), name_prefix);

  // Decimal carry: SCL(S1, S2, S3, C4) passes the sum bits through and
  // returns Cout = C4 ^ S3 (S2 + S1) on its last pin.
  auto scl = b.add_gate(gates.at("SCL"), {binary.sum[1], binary.sum[2], binary.sum[3], binary.carry},
                        stage_tag(tag_prefix, kStageCorrection));
  b.name_wire(scl[0], p + "S1t");
  b.name_wire(scl[1], p + "S2t");
  b.name_wire(scl[2], p + "S3t");
  b.name_wire(scl[3], p + "Cout0");

  // Add 0110 when Cout is set. Bit 0 is unchanged.
  const std::string adder2 = stage_tag(tag_prefix, kStageAdder2);
  WireRef k1 = b.add_constant(Bit::zero);
  b.name_wire(k1, p + "z4");
  auto pg = b.add_gate(gates.at("PG"), {scl[3], scl[0], k1}, adder2);  // (Cout, S1^Cout, S1 Cout)
  b.name_wire(pg[0], p + "Cout1");
  b.name_wire(pg[1], p + "T1");
  b.name_wire(pg[2], p + "c1");

  WireRef k2 = b.add_constant(Bit::zero);
  b.name_wire(k2, p + "z5");
  // Full adder on bit 2: (S2, Cout, sum, carry) with the Cout copy on Q.
  auto hng = b.add_gate(gates.at("HNG"), {scl[1], pg[0], pg[2], k2}, adder2);
  b.name_wire(hng[0], p + "gS2");
  b.name_wire(hng[1], p + "Cout");
  b.name_wire(hng[2], p + "T2");
  b.name_wire(hng[3], p + "c2");
  b.mark_garbage(hng[0]);

  auto fg = b.add_gate(gates.at("FG"), {scl[2], hng[3]}, adder2);  // (S3, S3 ^ c2)
  b.name_wire(fg[0], p + "gS3");
  b.name_wire(fg[1], p + "T3");
  b.mark_garbage(fg[0]);

  return DigitWires{hng[1], {binary.sum[0], pg[1], hng[2], fg[1]}};
}

}  // namespace

Circuit build_full_adder() {
  CircuitBuilder b = new_circuit({"a", "b", "cin"});
  WireRef zero = b.add_constant(Bit::zero);
  auto pins = b.add_gate(builtin_catalog().at("HNG"), {b.input(0), b.input(1), b.input(2), zero},
                         std::string(kStageAdder1));
  b.mark_garbage(pins[0]);
  b.mark_garbage(pins[1]);
  b.mark_output(pins[2], "sum");
  b.mark_output(pins[3], "carry");
  return b.seal();
}

Circuit build_ripple_adder4() {
  CircuitBuilder b = new_circuit(adder_input_labels(4));
  RippleWires r = append_ripple_adder(b, nibble(b, 'a', 0), nibble(b, 'b', 0), b.input("cin"),
                                      std::string(kStageAdder1), "");
  b.mark_output(r.carry, "c4");
  for (std::size_t i = 4; i-- > 0;) {
    b.mark_output(r.sum[i], bit_label('s', i));
  }
  return b.seal();
}

Circuit build_bcd_adder_digit() { return build_bcd_adder_n(1); }

Circuit build_bcd_adder_n(unsigned digits) {
  if (digits < 1 || digits > kMaxBcdDigits) {
    throw BadDigitCount("BCD adder supports 1.." + std::to_string(kMaxBcdDigits) +
                        " digits, got " + std::to_string(digits));
  }
  CircuitBuilder b = new_circuit(adder_input_labels(4 * std::size_t{digits}));
  WireRef carry = b.input("cin");
  std::vector<Nibble> sums;
  for (unsigned d = 0; d < digits; ++d) {
    const std::string tag_prefix = digits == 1 ? "" : "digit" + std::to_string(d) + "/";
    const std::string name_prefix = digits == 1 ? "" : "d" + std::to_string(d) + "_";
    DigitWires w = append_bcd_digit(b, nibble(b, 'a', 4 * d), nibble(b, 'b', 4 * d), carry,
                                    tag_prefix, name_prefix);
    carry = w.cout;
    sums.push_back(w.sum);
  }
  b.mark_output(carry, "cout");
  for (std::size_t bit = 4 * std::size_t{digits}; bit-- > 0;) {
    b.mark_output(sums[bit / 4][bit % 4], bit_label('s', bit));
  }
  return b.seal();
}

BitWord encode_bcd_inputs(std::uint64_t a, std::uint64_t b, Bit cin, unsigned digits) {
  auto to_bcd = [digits](std::uint64_t value) {
    std::uint64_t packed = 0;
    for (unsigned d = 0; d < digits; ++d) {
      packed |= (value % 10) << (4 * d);
      value /= 10;
    }
    if (value != 0) {
      throw std::out_of_range("operand has more than " + std::to_string(digits) + " digits");
    }
    return packed;
  };
  const unsigned bits = 4 * digits;
  return BitWord::from_uint(to_bcd(a), bits)
      .concat(BitWord::from_uint(to_bcd(b), bits))
      .concat(BitWord(std::vector<Bit>{cin}));
}

namespace {

constexpr std::array<ReferenceRow, 6> kReferenceRows = {{
    {"BCD adder[13] With out Fan-out", 4, 8, 3, 6, 4, 8, 11, 22, 11, 10, ""},
    {"BCD adder[14]", 4, 8, 6, 6, 4, 8, 14, 22, 17, 13,
     "correction gates printed as 3+3: correction plus fan-out"},
    {"BCD adder[15]", 8, 8, 7, 6, 8, 8, 23, 22, 17, 14, ""},
    {"BCD adder[16]", 4, 8, 3, 1, 3, 2, 10, 11, 7, 10, ""},
    {"BCD adder[17]", 4, 8, 2, 1, 3, 2, 9, 11, 7, 9, ""},
    {"Proposed BCD adder", 4, 8, 1, 0, 3, 2, 8, 10, 6, 8, ""},
}};

}  // namespace

std::span<const ReferenceRow> reference_table() { return kReferenceRows; }

const ReferenceRow& proposed_reference_row() { return kReferenceRows.back(); }

}  // namespace revbcd
