#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace granular {

/// Packed sequence over {0,1}. Bit i lives in word i/64 at position i%64;
/// trailing bits of the last word are kept zero so equality is word equality.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static Bits from_text(std::string_view zeros_ones);
  /// Hex form pairs with to_hex(): two hex digits per packed byte, low byte first.
  static Bits from_hex(std::size_t n, std::string_view hex);

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  void flip_all();

  std::string to_text() const;
  std::string to_hex() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Bits& a, const Bits& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Bits [offset, offset+length) of the binary Champernowne expansion
/// .110111001011... (the naturals 1, 2, 3, ... concatenated in binary).
/// Streamed; no materialization beyond the requested window.
Bits champernowne_bits(std::size_t length, std::uint64_t offset = 0);

}  // namespace granular
