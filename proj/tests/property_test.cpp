#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "revbcd/metrics.hpp"
#include "revbcd/netlist.hpp"
#include "revbcd/simulate.hpp"

namespace revbcd {
namespace {

constexpr int kTrials = 200;

// A builder plus the wires it has not consumed yet, in creation order.
struct Draft {
  CircuitBuilder builder;
  std::vector<WireRef> open;
};

WireRef take(std::vector<WireRef>& open, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
  const std::size_t i = pick(rng);
  WireRef w = open[i];
  open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
  return w;
}

// Random gates from the built-in catalog over 2..6 inputs and 0..2 constants.
// Every open wire is left unmarked.
Draft random_draft(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_inputs(2, 6);
  std::uniform_int_distribution<int> n_consts(0, 2);
  std::uniform_int_distribution<int> n_gates(1, 8);
  std::vector<std::string> labels;
  for (int i = n_inputs(rng); i > 0; --i) {
    labels.push_back("x" + std::to_string(labels.size()));
  }
  Draft d{new_circuit(labels), {}};
  d.open.assign(d.builder.inputs().begin(), d.builder.inputs().end());
  for (int i = n_consts(rng); i > 0; --i) {
    d.open.push_back(d.builder.add_constant(to_bit(rng() % 2 == 1)));
  }
  std::vector<const GateDef*> gates;
  for (const GateDef& g : builtin_catalog()) {
    gates.push_back(&g);
  }
  for (int i = n_gates(rng); i > 0; --i) {
    const GateDef& g = *gates[rng() % gates.size()];
    if (g.arity() > d.open.size()) {
      continue;
    }
    std::vector<WireRef> ins;
    for (unsigned k = 0; k < g.arity(); ++k) {
      ins.push_back(take(d.open, rng));
    }
    auto outs = d.builder.add_gate(g, ins, "s");
    d.open.insert(d.open.end(), outs.begin(), outs.end());
  }
  return d;
}

// Marks every open wire, roughly half as outputs.
Circuit finish(Draft d, std::mt19937& rng) {
  std::size_t label = 0;
  for (WireRef w : d.open) {
    if (rng() % 2 == 0) {
      d.builder.mark_output(w, "y" + std::to_string(label++));
    } else {
      d.builder.mark_garbage(w);
    }
  }
  return d.builder.seal();
}

Circuit random_circuit(std::mt19937& rng) { return finish(random_draft(rng), rng); }

bool forms_chain(const Circuit& c) {
  const auto& insts = c.instances();
  for (std::size_t i = 1; i < insts.size(); ++i) {
    bool linked = false;
    for (WireRef w : insts[i].inputs) {
      const WireSource& s = c.source(w);
      linked = linked || (s.kind == SourceKind::gate_output && s.index == i - 1);
    }
    if (!linked) {
      return false;
    }
  }
  return true;
}

TEST(RandomCircuits, SealAndConserveLines) {
  std::mt19937 rng(1);
  for (int t = 0; t < kTrials; ++t) {
    Circuit c = random_circuit(rng);
    EXPECT_EQ(c.input_count() + c.constants().size(), c.outputs().size() + c.garbage().size());
  }
}

TEST(RandomCircuits, OutputsAndGarbageDetermineInputs) {
  std::mt19937 rng(2);
  for (int t = 0; t < kTrials; ++t) {
    Circuit c = random_circuit(rng);
    Mapping m = circuit_mapping(c);
    std::set<std::vector<Bit>> seen;
    for (std::size_t row = 0; row < m.size(); ++row) {
      auto lines = m.lines(row);
      EXPECT_TRUE(seen.emplace(lines.begin(), lines.end()).second) << "trial " << t;
    }
  }
}

TEST(RandomCircuits, SimulateAgreesWithMapping) {
  std::mt19937 rng(3);
  for (int t = 0; t < kTrials; ++t) {
    Circuit c = random_circuit(rng);
    Mapping m = circuit_mapping(c);
    for (std::size_t row = 0; row < m.size(); ++row) {
      SimResult r = simulate(c, m.input(row));
      ASSERT_EQ(r.outputs, m.outputs(row));
      ASSERT_EQ(r.garbage, m.garbage(row));
    }
  }
}

TEST(RandomCircuits, DelayBoundedByGateCount) {
  std::mt19937 rng(4);
  int chains = 0;
  for (int t = 0; t < kTrials; ++t) {
    Circuit c = random_circuit(rng);
    const std::uint64_t d = delay(c);
    const std::size_t n = c.instances().size();
    EXPECT_LE(d, n);
    EXPECT_EQ(d == n, forms_chain(c)) << "trial " << t;
    chains += forms_chain(c) ? 1 : 0;
  }
  EXPECT_GT(chains, 0);
}

TEST(RandomCircuits, UnitCostEqualsGateCount) {
  CostTable unit;
  for (const GateDef& g : builtin_catalog()) {
    unit.set(g.name(), 1);
  }
  std::mt19937 rng(5);
  for (int t = 0; t < kTrials; ++t) {
    Circuit c = random_circuit(rng);
    MetricsReport r = analyze(c, unit);
    EXPECT_EQ(r.quantum_cost, r.gate_count);
  }
}

TEST(RandomCircuits, GateOnCriticalWireAddsOneLevel) {
  std::mt19937 rng(6);
  const GateDef& fg = builtin_catalog().at("FG");
  for (int t = 0; t < kTrials; ++t) {
    Draft d = random_draft(rng);
    if (d.open.size() < 2) {
      continue;
    }
    Draft copy = d;
    const std::uint64_t before = delay(finish(std::move(copy), rng));
    // Levels of the open wires, read back from a sealed copy.
    Draft probe = d;
    Circuit sealed = finish(std::move(probe), rng);
    std::vector<std::uint64_t> levels = wire_levels(sealed);
    auto deepest = std::max_element(d.open.begin(), d.open.end(), [&](WireRef a, WireRef b) {
      return levels[a.id] < levels[b.id];
    });
    WireRef critical = *deepest;
    d.open.erase(deepest);
    WireRef other = take(d.open, rng);
    auto outs = d.builder.add_gate(fg, {critical, other});
    d.open.insert(d.open.end(), outs.begin(), outs.end());
    EXPECT_EQ(delay(finish(std::move(d), rng)), before + 1) << "trial " << t;
  }
}

TEST(RandomCircuits, SecondConsumerIsRejectedWithoutSideEffects) {
  std::mt19937 rng(7);
  const GateDef& fg = builtin_catalog().at("FG");
  for (int t = 0; t < kTrials; ++t) {
    Draft d = random_draft(rng);
    CircuitBuilder& b = d.builder;
    // Consume one open wire, then offer it again in each possible way.
    WireRef used = take(d.open, rng);
    if (rng() % 2 == 0) {
      b.mark_output(used, "taken");
    } else {
      b.mark_garbage(used);
    }
    const std::size_t gates = b.gate_count();
    std::vector<bool> state;
    for (WireRef w : d.open) {
      state.push_back(b.consumed(w));
    }
    if (!d.open.empty()) {
      EXPECT_THROW(b.add_gate(fg, {d.open.front(), used}), FanOutViolation);
    }
    EXPECT_THROW(b.mark_output(used, "again"), FanOutViolation);
    EXPECT_THROW(b.mark_garbage(used), FanOutViolation);
    EXPECT_EQ(b.gate_count(), gates);
    for (std::size_t i = 0; i < d.open.size(); ++i) {
      EXPECT_EQ(b.consumed(d.open[i]), state[i]);
    }
    // The builder is still usable afterwards.
    (void)finish(std::move(d), rng);
  }
}

TEST(RandomCircuits, DanglingWireIsNamed) {
  std::mt19937 rng(8);
  for (int t = 0; t < kTrials; ++t) {
    Draft d = random_draft(rng);
    WireRef left = take(d.open, rng);
    std::size_t label = 0;
    for (WireRef w : d.open) {
      d.builder.mark_output(w, "y" + std::to_string(label++));
    }
    try {
      (void)d.builder.seal();
      FAIL() << "trial " << t;
    } catch (const ValidationFailed& e) {
      ASSERT_EQ(e.violations().size(), 2U);  // the wire, and the line count
      EXPECT_EQ(e.violations()[0].kind, Violation::Kind::dangling_wire);
      EXPECT_EQ(e.violations()[0].wire, left);
    }
  }
}

std::vector<std::uint32_t> random_rows(std::mt19937& rng, unsigned arity, bool permutation) {
  std::vector<std::uint32_t> rows(std::size_t{1} << arity);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i] = static_cast<std::uint32_t>(permutation ? i : rng() % rows.size());
  }
  if (permutation) {
    std::shuffle(rows.begin(), rows.end(), rng);
  }
  return rows;
}

bool bijective_by_sorting(std::vector<std::uint32_t> rows) {
  std::sort(rows.begin(), rows.end());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] != i) {
      return false;
    }
  }
  return true;
}

TEST(RandomTables, BijectivityMatchesSorting) {
  std::mt19937 rng(9);
  for (int t = 0; t < kTrials; ++t) {
    const unsigned arity = 1 + rng() % 6;
    auto rows = random_rows(rng, arity, t % 2 == 0);
    EXPECT_EQ(is_bijective(TruthTable(arity, rows)), bijective_by_sorting(rows));
  }
}

TEST(RandomTables, InverseUndoesApply) {
  std::mt19937 rng(10);
  std::vector<GateDef> gates(builtin_catalog().begin(), builtin_catalog().end());
  for (int t = 0; t < 20; ++t) {
    const unsigned arity = 1 + rng() % 5;
    gates.emplace_back("R" + std::to_string(t), TruthTable(arity, random_rows(rng, arity, true)));
  }
  for (const GateDef& g : gates) {
    GateDef inv = inverse(g);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.arity()); ++x) {
      BitWord w = BitWord::from_uint(x, g.arity());
      ASSERT_EQ(apply(inv, apply(g, w)), w) << g.name();
      ASSERT_EQ(apply(g, apply(inv, w)), w) << g.name();
    }
  }
}

}  // namespace
}  // namespace revbcd
