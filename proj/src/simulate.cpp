#include "revbcd/simulate.hpp"

#include <string>

namespace revbcd {

Simulator::Simulator(const Circuit& circuit)
    : circuit_(&circuit), values_(circuit.wire_count(), Bit::zero) {
  for (std::size_t i = 0; i < circuit.constants().size(); ++i) {
    values_[circuit.constant_wire(i).id] = circuit.constants()[i];
  }
}

void Simulator::run(std::span<const Bit> inputs, std::span<Bit> outputs, std::span<Bit> garbage) {
  const Circuit& c = *circuit_;
  if (inputs.size() != c.input_count()) {
    throw WidthMismatch("circuit has " + std::to_string(c.input_count()) +
                        " primary inputs, got " + std::to_string(inputs.size()) + " bits");
  }
  if (outputs.size() != c.outputs().size() || garbage.size() != c.garbage().size()) {
    throw WidthMismatch("output buffers do not match the circuit's output/garbage counts");
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    values_[c.input_wire(i).id] = inputs[i];
  }
  for (const GateInstance& inst : c.instances()) {
    std::uint32_t word = 0;
    for (WireRef w : inst.inputs) {
      word = (word << 1) | (is_set(values_[w.id]) ? 1U : 0U);
    }
    std::uint32_t out = inst.gate.apply_word(word);
    const std::size_t n = inst.outputs.size();
    for (std::size_t pin = 0; pin < n; ++pin) {
      values_[inst.outputs[pin].id] = to_bit(((out >> (n - 1 - pin)) & 1U) != 0);
    }
  }
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    outputs[i] = values_[c.outputs()[i].wire.id];
  }
  for (std::size_t i = 0; i < garbage.size(); ++i) {
    garbage[i] = values_[c.garbage()[i].id];
  }
}

SimResult Simulator::run(const BitWord& inputs) {
  if (inputs.width() != circuit_->input_count()) {
    throw WidthMismatch("circuit has " + std::to_string(circuit_->input_count()) +
                        " primary inputs, got " + std::to_string(inputs.width()) + " bits");
  }
  std::vector<Bit> out(circuit_->outputs().size());
  std::vector<Bit> junk(circuit_->garbage().size());
  run(inputs.bits(), out, junk);
  return SimResult{BitWord(std::move(out)), BitWord(std::move(junk))};
}

SimResult simulate(const Circuit& circuit, const BitWord& inputs) {
  Simulator sim(circuit);
  return sim.run(inputs);
}

Mapping::Mapping(std::size_t input_width, std::size_t output_width, std::size_t garbage_width)
    : input_width_(input_width),
      output_width_(output_width),
      garbage_width_(garbage_width),
      bits_((std::size_t{1} << input_width) * (output_width + garbage_width), Bit::zero) {}

std::span<const Bit> Mapping::lines(std::size_t row) const {
  const std::size_t stride = output_width_ + garbage_width_;
  return std::span<const Bit>(bits_).subspan(row * stride, stride);
}

std::span<Bit> Mapping::mutable_lines(std::size_t row) {
  const std::size_t stride = output_width_ + garbage_width_;
  return std::span<Bit>(bits_).subspan(row * stride, stride);
}

BitWord Mapping::outputs(std::size_t row) const {
  auto l = lines(row).first(output_width_);
  return BitWord(std::vector<Bit>(l.begin(), l.end()));
}

BitWord Mapping::garbage(std::size_t row) const {
  auto l = lines(row).subspan(output_width_);
  return BitWord(std::vector<Bit>(l.begin(), l.end()));
}

Mapping circuit_mapping(const Circuit& circuit) {
  const std::size_t k = circuit.input_count();
  if (k > kMaxEnumeratedInputs) {
    throw TooWide("exhaustive mapping is limited to " + std::to_string(kMaxEnumeratedInputs) +
                  " primary inputs, circuit has " + std::to_string(k));
  }
  Mapping mapping(k, circuit.outputs().size(), circuit.garbage().size());
  Simulator sim(circuit);
  std::vector<Bit> in(k);
  for (std::size_t row = 0; row < mapping.size(); ++row) {
    for (std::size_t i = 0; i < k; ++i) {
      in[i] = to_bit(((row >> (k - 1 - i)) & 1U) != 0);
    }
    auto lines = mapping.mutable_lines(row);
    sim.run(in, lines.first(mapping.output_width()), lines.subspan(mapping.output_width()));
  }
  return mapping;
}

}  // namespace revbcd
