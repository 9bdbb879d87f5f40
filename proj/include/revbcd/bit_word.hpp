#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revbcd {

enum class Bit : std::uint8_t { zero = 0, one = 1 };

constexpr Bit to_bit(bool value) noexcept { return value ? Bit::one : Bit::zero; }
constexpr bool is_set(Bit bit) noexcept { return bit == Bit::one; }
constexpr char to_char(Bit bit) noexcept { return is_set(bit) ? '1' : '0'; }

// Fixed-width sequence of bits. Index 0 is the most significant bit, which is
// also the first character of the textual form.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::vector<Bit> bits) : bits_(std::move(bits)) {}
  explicit BitWord(std::size_t width) : bits_(width, Bit::zero) {}

  // Throws std::invalid_argument on any value other than 0 or 1.
  static BitWord from_ints(std::initializer_list<int> values);
  // Throws std::invalid_argument on characters other than '0' and '1'.
  static BitWord from_string(std::string_view text);
  // MSB-first rendering of the low `width` bits of `value`.
  static BitWord from_uint(std::uint64_t value, std::size_t width);

  std::size_t width() const noexcept { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  Bit at(std::size_t i) const { return bits_.at(i); }
  void set(std::size_t i, Bit value) { bits_.at(i) = value; }

  std::span<const Bit> bits() const noexcept { return bits_; }

  // Requires width() <= 64.
  std::uint64_t to_uint() const;
  std::string to_string() const;

  BitWord slice(std::size_t offset, std::size_t count) const;
  BitWord concat(const BitWord& tail) const;

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  std::vector<Bit> bits_;
};

}  // namespace revbcd
