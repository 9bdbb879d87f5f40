#include "revbcd/netlist.hpp"

#include <algorithm>
#include <set>

namespace revbcd {

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::string text = "circuit validation failed";
  for (const Violation& v : violations) {
    text += "\n  - " + v.message;
  }
  return text;
}

}  // namespace

ValidationFailed::ValidationFailed(std::vector<Violation> violations)
    : Error(join_messages(violations)), violations_(std::move(violations)) {}

std::vector<std::string> Circuit::output_labels() const {
  std::vector<std::string> labels;
  labels.reserve(outputs_.size());
  for (const OutputPort& p : outputs_) {
    labels.push_back(p.label);
  }
  return labels;
}

std::vector<std::string> Circuit::instance_tags() const {
  std::vector<std::string> tags;
  tags.reserve(instances_.size());
  for (const GateInstance& g : instances_) {
    tags.push_back(g.tag);
  }
  return tags;
}

std::string describe_source(const Circuit& circuit, WireRef wire) {
  const WireSource& src = circuit.source(wire);
  std::string text;
  switch (src.kind) {
    case SourceKind::primary_input:
      text = "primary input '" + circuit.input_labels().at(src.index) + "'";
      break;
    case SourceKind::constant:
      text = "constant #" + std::to_string(src.index);
      break;
    case SourceKind::gate_output:
      text = "output " + std::to_string(src.pin) + " of " +
             circuit.instances().at(src.index).gate.name() + " instance #" +
             std::to_string(src.index);
      break;
  }
  if (const std::string& name = circuit.wire_name(wire); !name.empty()) {
    text = "wire '" + name + "' (" + text + ")";
  }
  return text;
}

CircuitBuilder::CircuitBuilder(std::vector<std::string> input_labels) {
  if (input_labels.empty()) {
    throw std::invalid_argument("a circuit needs at least one primary input");
  }
  std::set<std::string, std::less<>> seen;
  for (const std::string& label : input_labels) {
    if (label.empty()) {
      throw std::invalid_argument("primary input labels must be nonempty");
    }
    if (!seen.insert(label).second) {
      throw DuplicateLabel("duplicate primary input label '" + label + "'");
    }
  }
  circuit_.input_labels_ = std::move(input_labels);
  for (std::size_t i = 0; i < circuit_.input_labels_.size(); ++i) {
    WireRef w =
        new_wire(WireSource{SourceKind::primary_input, static_cast<std::uint32_t>(i), 0});
    circuit_.input_wires_.push_back(w);
    circuit_.names_[w.id] = circuit_.input_labels_[i];
  }
}

WireRef CircuitBuilder::input(std::string_view label) const {
  const auto& labels = circuit_.input_labels_;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw UnknownWire("no primary input labelled '" + std::string(label) + "'");
  }
  return circuit_.input_wires_[static_cast<std::size_t>(it - labels.begin())];
}

WireRef CircuitBuilder::new_wire(WireSource source) {
  circuit_.sources_.push_back(source);
  circuit_.sinks_.push_back(WireSink{});
  circuit_.names_.emplace_back();
  return WireRef{static_cast<std::uint32_t>(circuit_.sources_.size() - 1)};
}

void CircuitBuilder::check_wire(WireRef wire) const {
  if (wire.id >= circuit_.sources_.size()) {
    throw UnknownWire("wire #" + std::to_string(wire.id) + " does not belong to this circuit");
  }
}

std::string CircuitBuilder::describe(WireRef wire) const { return describe_source(circuit_, wire); }

bool CircuitBuilder::consumed(WireRef wire) const {
  check_wire(wire);
  return circuit_.sinks_[wire.id].kind != SinkKind::none;
}

WireRef CircuitBuilder::add_constant(Bit value) {
  auto index = static_cast<std::uint32_t>(circuit_.constants_.size());
  circuit_.constants_.push_back(value);
  WireRef w = new_wire(WireSource{SourceKind::constant, index, 0});
  circuit_.constant_wires_.push_back(w);
  return w;
}

std::vector<WireRef> CircuitBuilder::add_gate(const GateDef& gate,
                                              std::span<const WireRef> inputs, std::string tag) {
  if (inputs.size() != gate.arity()) {
    throw ArityMismatch("gate '" + gate.name() + "' has " + std::to_string(gate.arity()) +
                        " inputs, " + std::to_string(inputs.size()) + " wires given");
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    check_wire(inputs[i]);
    if (consumed(inputs[i])) {
      throw FanOutViolation(describe(inputs[i]) + " is already consumed; cannot also feed " +
                            gate.name() + " pin " + std::to_string(i));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (inputs[j] == inputs[i]) {
        throw FanOutViolation(describe(inputs[i]) + " feeds both pin " + std::to_string(j) +
                              " and pin " + std::to_string(i) + " of " + gate.name());
      }
    }
  }

  auto index = static_cast<std::uint32_t>(circuit_.instances_.size());
  GateInstance inst{gate, {inputs.begin(), inputs.end()}, {}, std::move(tag)};
  for (std::uint32_t pin = 0; pin < inputs.size(); ++pin) {
    circuit_.sinks_[inputs[pin].id] = WireSink{SinkKind::gate_input, index, pin};
  }
  for (std::uint32_t pin = 0; pin < gate.arity(); ++pin) {
    inst.outputs.push_back(new_wire(WireSource{SourceKind::gate_output, index, pin}));
  }
  circuit_.instances_.push_back(std::move(inst));
  return circuit_.instances_.back().outputs;
}

void CircuitBuilder::mark_output(WireRef wire, std::string label) {
  check_wire(wire);
  if (consumed(wire)) {
    throw FanOutViolation(describe(wire) + " is already consumed; cannot mark it as output '" +
                          label + "'");
  }
  for (const OutputPort& p : circuit_.outputs_) {
    if (p.label == label) {
      throw DuplicateLabel("duplicate primary output label '" + label + "'");
    }
  }
  circuit_.sinks_[wire.id] = WireSink{
      SinkKind::primary_output, static_cast<std::uint32_t>(circuit_.outputs_.size()), 0};
  circuit_.outputs_.push_back(OutputPort{std::move(label), wire});
}

void CircuitBuilder::mark_garbage(WireRef wire) {
  check_wire(wire);
  if (consumed(wire)) {
    throw FanOutViolation(describe(wire) + " is already consumed; cannot mark it as garbage");
  }
  circuit_.sinks_[wire.id] =
      WireSink{SinkKind::garbage, static_cast<std::uint32_t>(circuit_.garbage_.size()), 0};
  circuit_.garbage_.push_back(wire);
}

void CircuitBuilder::name_wire(WireRef wire, std::string name) {
  check_wire(wire);
  circuit_.names_[wire.id] = std::move(name);
}

std::vector<Violation> CircuitBuilder::violations() const {
  const Circuit& c = circuit_;
  std::vector<Violation> found;

  for (std::uint32_t id = 0; id < c.sinks_.size(); ++id) {
    if (c.sinks_[id].kind == SinkKind::none) {
      WireRef w{id};
      found.push_back({Violation::Kind::dangling_wire, w,
                       "dangling wire: " + describe(w) +
                           " is neither consumed nor marked as output or garbage"});
    }
  }

  for (std::size_t i = 0; i < c.instances_.size(); ++i) {
    const GateInstance& inst = c.instances_[i];
    if (inst.inputs.size() != inst.gate.arity() || inst.outputs.size() != inst.gate.arity()) {
      found.push_back({Violation::Kind::bad_pin_count, std::nullopt,
                       inst.gate.name() + " instance #" + std::to_string(i) +
                           " does not drive every pin exactly once"});
    }
    for (WireRef w : inst.inputs) {
      const WireSource& src = c.sources_[w.id];
      if (src.kind == SourceKind::gate_output && src.index >= i) {
        found.push_back({Violation::Kind::feedback, w,
                         "feedback: " + describe(w) + " drives an earlier instance #" +
                             std::to_string(i)});
      }
    }
  }

  std::set<WireRef> marked;
  for (const OutputPort& p : c.outputs_) {
    marked.insert(p.wire);
  }
  for (WireRef w : c.garbage_) {
    if (marked.count(w) != 0) {
      found.push_back({Violation::Kind::overlapping_outputs, w,
                       describe(w) + " is both a primary output and garbage"});
    }
  }

  const std::size_t lines_in = c.input_labels_.size() + c.constants_.size();
  const std::size_t lines_out = c.outputs_.size() + c.garbage_.size();
  if (lines_in != lines_out) {
    found.push_back({Violation::Kind::line_count, std::nullopt,
                     "line count not conserved: " + std::to_string(lines_in) +
                         " inputs+constants vs " + std::to_string(lines_out) +
                         " outputs+garbage"});
  }
  return found;
}

Circuit CircuitBuilder::seal() const {
  if (auto found = violations(); !found.empty()) {
    throw ValidationFailed(std::move(found));
  }
  return circuit_;
}

}  // namespace revbcd
