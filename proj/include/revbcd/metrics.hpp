#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "revbcd/cost_table.hpp"
#include "revbcd/netlist.hpp"

namespace revbcd {

struct MetricsReport {
  std::uint64_t gate_count = 0;
  std::uint64_t garbage_count = 0;
  std::uint64_t constant_count = 0;
  std::uint64_t quantum_cost = 0;
  std::uint64_t delay_levels = 0;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

// Throws UnknownGateCost if a gate used by the circuit has no entry.
MetricsReport analyze(const Circuit& circuit, const CostTable& costs);

// Longest input-to-output path counted in gates (unit delay per gate).
std::uint64_t delay(const Circuit& circuit);

// Gate level of every wire, indexed by WireRef::id. Primary inputs and
// constants are at level 0.
std::vector<std::uint64_t> wire_levels(const Circuit& circuit);

struct StageDelay {
  std::string stage;
  std::uint64_t levels = 0;
  friend bool operator==(const StageDelay&, const StageDelay&) = default;
};

// `stage_tags[i]` names the stage of instance i. Each stage contributes the
// longest chain formed by its own instances. Stages are returned in pipeline
// order. Throws std::invalid_argument if the tags do not cover every instance
// exactly once, StagesNotLinear if stage dependencies are cyclic or the
// contributions do not add up to delay(circuit) (stages in parallel rather
// than in sequence along the critical path).
std::vector<StageDelay> delay_decomposition(const Circuit& circuit,
                                            std::span<const std::string> stage_tags);

struct StageReport {
  std::string stage;
  MetricsReport metrics;  // delay_levels is the stage's own longest chain
};

// Per-stage breakdown without the pipeline check. Garbage is attributed to
// the stage whose gate produced it; constants to the stage that consumes them.
std::vector<StageReport> analyze_stages(const Circuit& circuit, const CostTable& costs,
                                        std::span<const std::string> stage_tags);

std::string to_text(const MetricsReport& report);
// One `key=value` line per metric.
std::string to_key_value(const MetricsReport& report);

}  // namespace revbcd
