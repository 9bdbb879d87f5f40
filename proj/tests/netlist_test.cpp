#include <gtest/gtest.h>

#include <type_traits>

#include "revbcd/designs.hpp"
#include "revbcd/netlist.hpp"
#include "revbcd/simulate.hpp"

namespace revbcd {
namespace {

const GateDef& gate(const char* name) { return builtin_catalog().at(name); }

bool has_violation(const ValidationFailed& e, Violation::Kind kind) {
  for (const Violation& v : e.violations()) {
    if (v.kind == kind) {
      return true;
    }
  }
  return false;
}

TEST(NewCircuit, ExposesOneWirePerInput) {
  CircuitBuilder b = new_circuit({"a0"});
  EXPECT_EQ(b.inputs().size(), 1U);
  EXPECT_FALSE(b.consumed(b.input(0)));
}

TEST(NewCircuit, RejectsDuplicateAndEmptyLabels) {
  EXPECT_THROW(new_circuit({"x", "x"}), DuplicateLabel);
  EXPECT_THROW(new_circuit({}), std::invalid_argument);
  EXPECT_THROW(new_circuit({""}), std::invalid_argument);
}

TEST(NewCircuit, BcdAdderInputSpace) {
  CircuitBuilder b =
      new_circuit({"a3", "a2", "a1", "a0", "b3", "b2", "b1", "b0", "cin"});
  EXPECT_EQ(b.inputs().size(), 9U);
  EXPECT_EQ(b.input("cin"), b.input(8));
  EXPECT_THROW(b.input("c"), UnknownWire);
}

TEST(AddConstant, CountsConstants) {
  CircuitBuilder b = new_circuit({"a"});
  WireRef w = b.add_constant(Bit::zero);
  EXPECT_FALSE(b.consumed(w));
  EXPECT_EQ(b.constant_count(), 1U);
  for (int i = 0; i < 3; ++i) {
    b.add_constant(Bit::zero);
  }
  EXPECT_EQ(b.constant_count(), 4U);
}

TEST(AddConstant, OnlyAcceptsBits) {
  static_assert(!std::is_invocable_v<decltype(&CircuitBuilder::add_constant), CircuitBuilder&, int>);
  static_assert(std::is_invocable_v<decltype(&CircuitBuilder::add_constant), CircuitBuilder&, Bit>);
}

TEST(AddConstant, RippleAdderUsesFour) {
  Circuit c = build_ripple_adder4();
  EXPECT_EQ(c.constants().size(), 4U);
}

TEST(AddGate, ReturnsFreshOutputs) {
  CircuitBuilder b = new_circuit({"a0", "b0", "cin"});
  WireRef k = b.add_constant(Bit::zero);
  auto outs = b.add_gate(gate("HNG"), {b.input(0), b.input(1), b.input(2), k});
  ASSERT_EQ(outs.size(), 4U);
  for (WireRef w : outs) {
    EXPECT_FALSE(b.consumed(w));
  }
  EXPECT_TRUE(b.consumed(k));
  EXPECT_TRUE(b.consumed(b.input(0)));
}

TEST(AddGate, SameWireTwiceIsFanOut) {
  CircuitBuilder b = new_circuit({"a", "b"});
  EXPECT_THROW(b.add_gate(gate("FG"), {b.input(0), b.input(0)}), FanOutViolation);
  // Nothing was consumed by the failed call.
  EXPECT_FALSE(b.consumed(b.input(0)));
  EXPECT_EQ(b.gate_count(), 0U);
}

TEST(AddGate, ConsumedWireIsFanOut) {
  CircuitBuilder b = new_circuit({"a", "b", "c"});
  b.add_gate(gate("FG"), {b.input(0), b.input(1)});
  EXPECT_THROW(b.add_gate(gate("FG"), {b.input(2), b.input(0)}), FanOutViolation);
  EXPECT_FALSE(b.consumed(b.input(2)));
}

TEST(AddGate, ArityMismatch) {
  CircuitBuilder b = new_circuit({"w1", "w2", "w3"});
  EXPECT_THROW(b.add_gate(gate("FG"), {b.input(0), b.input(1), b.input(2)}), ArityMismatch);
}

TEST(AddGate, ForeignWireIsRejected) {
  CircuitBuilder b = new_circuit({"a", "b"});
  EXPECT_THROW(b.add_gate(gate("FG"), {b.input(0), WireRef{99}}), UnknownWire);
}

TEST(Mark, FullAdderHasTwoGarbage) {
  Circuit fa = build_full_adder();
  EXPECT_EQ(fa.garbage().size(), 2U);
  EXPECT_EQ(fa.output_labels(), (std::vector<std::string>{"sum", "carry"}));
}

TEST(Mark, OutputThenGarbageIsFanOut) {
  CircuitBuilder b = new_circuit({"a"});
  b.mark_output(b.input(0), "y");
  EXPECT_THROW(b.mark_garbage(b.input(0)), FanOutViolation);
  EXPECT_THROW(b.mark_output(b.input(0), "z"), FanOutViolation);
}

TEST(Mark, DuplicateOutputLabel) {
  CircuitBuilder b = new_circuit({"a", "b"});
  b.mark_output(b.input(0), "y");
  EXPECT_THROW(b.mark_output(b.input(1), "y"), DuplicateLabel);
}

TEST(Mark, BcdAdderLabels) {
  Circuit c = build_bcd_adder_digit();
  EXPECT_EQ(c.output_labels(), (std::vector<std::string>{"cout", "s3", "s2", "s1", "s0"}));
}

TEST(Seal, DanglingGateOutputFails) {
  CircuitBuilder b = new_circuit({"a", "b"});
  auto outs = b.add_gate(gate("FG"), {b.input(0), b.input(1)});
  b.mark_output(outs[0], "p");
  try {
    (void)b.seal();
    FAIL() << "sealed with a dangling wire";
  } catch (const ValidationFailed& e) {
    EXPECT_TRUE(has_violation(e, Violation::Kind::dangling_wire));
    ASSERT_FALSE(e.violations().empty());
    EXPECT_EQ(e.violations().front().wire, outs[1]);
  }
}

TEST(Seal, ReportsEveryViolation) {
  CircuitBuilder b = new_circuit({"a", "b", "c"});
  b.add_constant(Bit::one);
  try {
    (void)b.seal();
    FAIL();
  } catch (const ValidationFailed& e) {
    // Three inputs, one constant left unconsumed, plus the line count.
    std::size_t dangling = 0;
    for (const Violation& v : e.violations()) {
      dangling += v.kind == Violation::Kind::dangling_wire ? 1 : 0;
    }
    EXPECT_EQ(dangling, 4U);
    EXPECT_TRUE(has_violation(e, Violation::Kind::line_count));
  }
}

TEST(Seal, PassThroughCircuitIsValid) {
  CircuitBuilder b = new_circuit({"x", "y"});
  b.mark_output(b.input(0), "x");
  b.mark_output(b.input(1), "y");
  Circuit c = b.seal();
  EXPECT_TRUE(c.instances().empty());
  EXPECT_EQ(simulate(c, BitWord::from_string("10")).outputs.to_string(), "10");
}

TEST(Seal, BcdAdderSeals) {
  Circuit c = build_bcd_adder_digit();
  EXPECT_EQ(c.instances().size(), 8U);
  EXPECT_EQ(c.input_count() + c.constants().size(), c.outputs().size() + c.garbage().size());
}

TEST(Simulate, FullAdderAllOnes) {
  Circuit fa = build_full_adder();
  SimResult r = simulate(fa, BitWord::from_string("111"));
  EXPECT_EQ(r.outputs.to_string(), "11");  // sum 1, carry 1
  EXPECT_EQ(r.garbage.to_string(), "11");  // A, B pass-throughs
}

TEST(Simulate, BcdNinePlusNinePlusOne) {
  Circuit c = build_bcd_adder_digit();
  SimResult r = simulate(c, encode_bcd_inputs(9, 9, Bit::one, 1));
  EXPECT_EQ(r.outputs.to_string(), "11001");  // 19
}

TEST(Simulate, WidthMismatch) {
  Circuit fa = build_full_adder();
  EXPECT_THROW(simulate(fa, BitWord::from_string("11")), WidthMismatch);
}

TEST(Mapping, PassThroughIsIdentity) {
  CircuitBuilder b = new_circuit({"x", "y"});
  b.mark_output(b.input(0), "x");
  b.mark_output(b.input(1), "y");
  Mapping m = circuit_mapping(b.seal());
  ASSERT_EQ(m.size(), 4U);
  for (std::size_t row = 0; row < 4; ++row) {
    EXPECT_EQ(m.outputs(row), m.input(row));
    EXPECT_EQ(m.garbage(row).width(), 0U);
  }
}

TEST(Mapping, FullAdderMatchesBinaryAddition) {
  Mapping m = circuit_mapping(build_full_adder());
  ASSERT_EQ(m.size(), 8U);
  for (std::size_t row = 0; row < 8; ++row) {
    const auto in = m.input(row);
    const int total = int(is_set(in[0])) + int(is_set(in[1])) + int(is_set(in[2]));
    EXPECT_EQ(m.outputs(row).to_uint(), static_cast<std::uint64_t>((total % 2) << 1 | total / 2));
  }
}

TEST(Mapping, BcdAdderHas512Rows) {
  Circuit c = build_bcd_adder_digit();
  Mapping m = circuit_mapping(c);
  EXPECT_EQ(m.size(), 512U);
  EXPECT_EQ(m.output_width(), 5U);
  EXPECT_EQ(m.garbage_width(), 10U);
}

TEST(Mapping, RefusesWideCircuits) {
  std::vector<std::string> labels;
  for (int i = 0; i < 21; ++i) {
    labels.push_back("i" + std::to_string(i));
  }
  CircuitBuilder b = new_circuit(labels);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    b.mark_output(b.input(i), labels[i]);
  }
  EXPECT_THROW(circuit_mapping(b.seal()), TooWide);
}

}  // namespace
}  // namespace revbcd
