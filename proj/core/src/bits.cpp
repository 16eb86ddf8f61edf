#include "granular/bits.hpp"

#include "granular/errors.hpp"

namespace granular {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

Bits Bits::from_text(std::string_view zeros_ones) {
  Bits b(zeros_ones.size());
  for (std::size_t i = 0; i < zeros_ones.size(); ++i) {
    char c = zeros_ones[i];
    if (c == '1')
      b.set(i, true);
    else if (c != '0')
      throw ParseError("bit text must be over {0,1}");
  }
  return b;
}

Bits Bits::from_hex(std::size_t n, std::string_view hex) {
  std::size_t bytes = (n + 7) / 8;
  if (hex.size() != 2 * bytes) throw ParseError("hex length does not match bit count");
  Bits b(n);
  for (std::size_t i = 0; i < bytes; ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw ParseError("bad hex digit");
    std::uint64_t byte = static_cast<std::uint64_t>(hi << 4 | lo);
    b.words_[i / 8] |= byte << (8 * (i % 8));
  }
  // reject set bits beyond n
  Bits check = b;
  for (std::size_t i = n; i < bytes * 8; ++i) {
    if (check.get(i)) throw ParseError("hex encodes bits beyond the stated length");
  }
  return b;
}

void Bits::flip_all() {
  for (auto& w : words_) w = ~w;
  if (n_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t(1) << (n_ % 64)) - 1;
  }
}

std::string Bits::to_text() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::string Bits::to_hex() const {
  std::size_t bytes = (n_ + 7) / 8;
  std::string s(2 * bytes, '0');
  for (std::size_t i = 0; i < bytes; ++i) {
    std::uint64_t byte = (words_[i / 8] >> (8 * (i % 8))) & 0xff;
    s[2 * i] = kHexDigits[byte >> 4];
    s[2 * i + 1] = kHexDigits[byte & 0xf];
  }
  return s;
}

Bits champernowne_bits(std::size_t length, std::uint64_t offset) {
  if (length == 0) throw InvalidParametrization("length must be positive");
  // Naturals with d bits contribute d * 2^(d-1) bits; the cumulative count up
  // to and including all d-bit naturals is C(d) = (d-1) * 2^d + 1.
  auto cumulative = [](unsigned d) -> std::uint64_t {
    if (d == 0) return 0;
    return (std::uint64_t(d) - 1) * (std::uint64_t(1) << d) + 1;
  };
  unsigned d = 1;
  while (cumulative(d) <= offset) ++d;
  std::uint64_t into_group = offset - cumulative(d - 1);
  std::uint64_t value = (std::uint64_t(1) << (d - 1)) + into_group / d;
  unsigned bit_in_value = static_cast<unsigned>(into_group % d);  // 0 = most significant

  Bits out(length);
  std::size_t produced = 0;
  while (produced < length) {
    if (value >> d) {  // value outgrew d bits
      ++d;
    }
    for (unsigned b = bit_in_value; b < d && produced < length; ++b) {
      bool bit = (value >> (d - 1 - b)) & 1u;
      if (bit) out.set(produced, true);
      ++produced;
    }
    bit_in_value = 0;
    ++value;
  }
  return out;
}

}  // namespace granular
