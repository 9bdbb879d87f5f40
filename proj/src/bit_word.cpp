#include "revbcd/bit_word.hpp"

#include <stdexcept>

namespace revbcd {

BitWord BitWord::from_ints(std::initializer_list<int> values) {
  std::vector<Bit> bits;
  bits.reserve(values.size());
  for (int v : values) {
    if (v != 0 && v != 1) {
      throw std::invalid_argument("bit value must be 0 or 1, got " + std::to_string(v));
    }
    bits.push_back(to_bit(v == 1));
  }
  return BitWord(std::move(bits));
}

BitWord BitWord::from_string(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring may only contain '0' and '1': '" +
                                  std::string(text) + "'");
    }
    bits.push_back(to_bit(c == '1'));
  }
  return BitWord(std::move(bits));
}

BitWord BitWord::from_uint(std::uint64_t value, std::size_t width) {
  if (width > 64) {
    throw std::invalid_argument("from_uint supports at most 64 bits");
  }
  std::vector<Bit> bits(width);
  for (std::size_t i = 0; i < width; ++i) {
    bits[width - 1 - i] = to_bit(((value >> i) & 1U) != 0);
  }
  return BitWord(std::move(bits));
}

std::uint64_t BitWord::to_uint() const {
  if (bits_.size() > 64) {
    throw std::length_error("BitWord wider than 64 bits cannot be packed");
  }
  std::uint64_t value = 0;
  for (Bit b : bits_) {
    value = (value << 1) | (is_set(b) ? 1U : 0U);
  }
  return value;
}

std::string BitWord::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) {
    s.push_back(to_char(b));
  }
  return s;
}

BitWord BitWord::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > bits_.size()) {
    throw std::out_of_range("BitWord::slice out of range");
  }
  return BitWord(std::vector<Bit>(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                                  bits_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

BitWord BitWord::concat(const BitWord& tail) const {
  std::vector<Bit> bits = bits_;
  bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
  return BitWord(std::move(bits));
}

}  // namespace revbcd
