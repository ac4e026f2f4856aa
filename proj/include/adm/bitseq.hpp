#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "adm/errors.hpp"

namespace adm {

// Ordered bit sequence with explicit length.
class BitSequence {
public:
  BitSequence() = default;

  static BitSequence from_string(std::string_view text) {
    BitSequence s;
    s.bits_.reserve(text.size());
    for (char ch : text) {
      if (ch != '0' && ch != '1') throw DomainError("bit string may contain only 0 and 1");
      s.bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return s;
  }

  std::string to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
  }

  void push_back(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit & 1)); }

  int operator[](std::size_t i) const { return bits_[i]; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool is_prefix_of(const BitSequence& other) const {
    if (size() > other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
      if (bits_[i] != other.bits_[i]) return false;
    }
    return true;
  }

  bool operator==(const BitSequence& other) const { return bits_ == other.bits_; }
  bool operator<(const BitSequence& other) const { return bits_ < other.bits_; }

  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }

private:
  std::vector<std::uint8_t> bits_;
};

// MSB-first packing, final byte zero-padded.
inline std::vector<std::uint8_t> pack_bits_msb(const BitSequence& bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

inline BitSequence unpack_bits_msb(const std::vector<std::uint8_t>& bytes,
                                   std::size_t bit_count) {
  if (bit_count > bytes.size() * 8) throw DomainError("bit count exceeds buffer");
  BitSequence bits;
  for (std::size_t i = 0; i < bit_count; ++i) {
    bits.push_back((bytes[i / 8] >> (7 - i % 8)) & 1);
  }
  return bits;
}

}  // namespace adm
