#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revbcd/bit_word.hpp"
#include "revbcd/errors.hpp"
#include "revbcd/gate.hpp"

namespace revbcd {

struct WireRef {
  std::uint32_t id = 0;
  friend auto operator<=>(const WireRef&, const WireRef&) = default;
};

enum class SourceKind : std::uint8_t { primary_input, constant, gate_output };
enum class SinkKind : std::uint8_t { none, gate_input, primary_output, garbage };

// `index` is the primary-input / constant / instance / output / garbage
// index depending on the kind; `pin` only applies to gate pins.
struct WireSource {
  SourceKind kind;
  std::uint32_t index;
  std::uint32_t pin = 0;
};

struct WireSink {
  SinkKind kind = SinkKind::none;
  std::uint32_t index = 0;
  std::uint32_t pin = 0;
};

struct GateInstance {
  GateDef gate;
  std::vector<WireRef> inputs;
  std::vector<WireRef> outputs;
  std::string tag;  // free-form, e.g. a pipeline stage label
};

struct OutputPort {
  std::string label;
  WireRef wire;
};

struct Violation {
  enum class Kind { dangling_wire, bad_pin_count, feedback, overlapping_outputs, line_count };
  Kind kind;
  std::optional<WireRef> wire;
  std::string message;
};

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Sealed reversible circuit. Instances are stored in a topological order.
class Circuit {
 public:
  const std::vector<std::string>& input_labels() const noexcept { return input_labels_; }
  const std::vector<Bit>& constants() const noexcept { return constants_; }
  const std::vector<GateInstance>& instances() const noexcept { return instances_; }
  const std::vector<OutputPort>& outputs() const noexcept { return outputs_; }
  const std::vector<WireRef>& garbage() const noexcept { return garbage_; }

  std::size_t input_count() const noexcept { return input_labels_.size(); }
  std::size_t wire_count() const noexcept { return sources_.size(); }
  WireRef input_wire(std::size_t i) const { return input_wires_.at(i); }
  WireRef constant_wire(std::size_t i) const { return constant_wires_.at(i); }

  const WireSource& source(WireRef w) const { return sources_.at(w.id); }
  const WireSink& sink(WireRef w) const { return sinks_.at(w.id); }
  // Empty unless a name was attached while building.
  const std::string& wire_name(WireRef w) const { return names_.at(w.id); }

  std::vector<std::string> output_labels() const;
  std::vector<std::string> instance_tags() const;

 private:
  friend class CircuitBuilder;
  Circuit() = default;

  std::vector<std::string> input_labels_;
  std::vector<WireRef> input_wires_;
  std::vector<Bit> constants_;
  std::vector<WireRef> constant_wires_;
  std::vector<GateInstance> instances_;
  std::vector<OutputPort> outputs_;
  std::vector<WireRef> garbage_;
  std::vector<WireSource> sources_;
  std::vector<WireSink> sinks_;
  std::vector<std::string> names_;
};

// Incremental construction. Gates may only consume wires that already
// exist, so feedback cannot be expressed; each wire feeds exactly one sink.
class CircuitBuilder {
 public:
  // Throws DuplicateLabel, or std::invalid_argument for an empty list/label.
  explicit CircuitBuilder(std::vector<std::string> input_labels);

  WireRef input(std::size_t index) const { return circuit_.input_wires_.at(index); }
  WireRef input(std::string_view label) const;
  std::span<const WireRef> inputs() const noexcept { return circuit_.input_wires_; }

  WireRef add_constant(Bit value);
  std::size_t constant_count() const noexcept { return circuit_.constants_.size(); }

  // Consumes every input wire and returns gate.arity() fresh output wires.
  // Throws ArityMismatch, FanOutViolation or UnknownWire; on error nothing is
  // consumed.
  std::vector<WireRef> add_gate(const GateDef& gate, std::span<const WireRef> inputs,
                                std::string tag = {});
  std::vector<WireRef> add_gate(const GateDef& gate, std::initializer_list<WireRef> inputs,
                                std::string tag = {}) {
    return add_gate(gate, std::span<const WireRef>(inputs.begin(), inputs.size()),
                    std::move(tag));
  }

  // Throws FanOutViolation, DuplicateLabel or UnknownWire.
  void mark_output(WireRef wire, std::string label);
  void mark_garbage(WireRef wire);

  void name_wire(WireRef wire, std::string name);

  bool consumed(WireRef wire) const;
  std::size_t gate_count() const noexcept { return circuit_.instances_.size(); }

  // Every structural problem found; empty when seal() would succeed.
  std::vector<Violation> violations() const;
  // Throws ValidationFailed listing every violation.
  Circuit seal() const;

 private:
  WireRef new_wire(WireSource source);
  void check_wire(WireRef wire) const;
  std::string describe(WireRef wire) const;

  Circuit circuit_;
};

inline CircuitBuilder new_circuit(std::vector<std::string> input_labels) {
  return CircuitBuilder(std::move(input_labels));
}

// Human-readable origin of a wire, e.g. "output 2 of HNG instance #3".
std::string describe_source(const Circuit& circuit, WireRef wire);

}  // namespace revbcd
