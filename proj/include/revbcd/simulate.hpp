#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "revbcd/bit_word.hpp"
#include "revbcd/netlist.hpp"

namespace revbcd {

struct SimResult {
  BitWord outputs;  // declaration order of primary outputs
  BitWord garbage;  // declaration order of garbage marks
};

// Reusable evaluator. Holds a per-wire scratch buffer, so one instance must
// not be shared between threads; create one per worker instead.
class Simulator {
 public:
  // Keeps a reference to `circuit`.
  explicit Simulator(const Circuit& circuit);
  explicit Simulator(Circuit&&) = delete;

  // Sizes must match the circuit's input/output/garbage counts.
  void run(std::span<const Bit> inputs, std::span<Bit> outputs, std::span<Bit> garbage);
  SimResult run(const BitWord& inputs);

  const Circuit& circuit() const noexcept { return *circuit_; }

 private:
  const Circuit* circuit_;
  std::vector<Bit> values_;
};

// Throws WidthMismatch when inputs.width() differs from the input count.
SimResult simulate(const Circuit& circuit, const BitWord& inputs);

inline constexpr std::size_t kMaxEnumeratedInputs = 20;

// Exhaustive input -> (outputs, garbage) table. Row r is the input word whose
// MSB-first value is r.
class Mapping {
 public:
  Mapping(std::size_t input_width, std::size_t output_width, std::size_t garbage_width);

  std::size_t size() const noexcept { return std::size_t{1} << input_width_; }
  std::size_t input_width() const noexcept { return input_width_; }
  std::size_t output_width() const noexcept { return output_width_; }
  std::size_t garbage_width() const noexcept { return garbage_width_; }

  BitWord input(std::size_t row) const { return BitWord::from_uint(row, input_width_); }
  BitWord outputs(std::size_t row) const;
  BitWord garbage(std::size_t row) const;
  // outputs ++ garbage for one row.
  std::span<const Bit> lines(std::size_t row) const;

 private:
  friend Mapping circuit_mapping(const Circuit& circuit);
  std::span<Bit> mutable_lines(std::size_t row);

  std::size_t input_width_;
  std::size_t output_width_;
  std::size_t garbage_width_;
  std::vector<Bit> bits_;
};

// Throws TooWide above kMaxEnumeratedInputs primary inputs.
Mapping circuit_mapping(const Circuit& circuit);

}  // namespace revbcd
