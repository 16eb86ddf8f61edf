#pragma once

#include <cstdint>

#include "granular/bits.hpp"
#include "granular/dyadic.hpp"
#include "granular/numeric.hpp"

namespace granular {

/// Sequence over {+1, -1}, stored packed with bit 1 <-> +1 (a = 2c - 1).
/// Immutable in use; all operations below are pure functions.
class BitString {
 public:
  explicit BitString(Bits bits) : bits_(std::move(bits)) {}

  static BitString ones(std::size_t n);        // all +1
  static BitString minus_ones(std::size_t n);  // all -1

  std::size_t size() const { return bits_.size(); }
  int entry(std::size_t i) const { return bits_.get(i) ? 1 : -1; }
  const Bits& bits() const { return bits_; }

  BitString negated() const;

  friend bool operator==(const BitString& a, const BitString& b) = default;

 private:
  Bits bits_;
};

/// Entrywise 0 -> -1, 1 -> +1.
BitString to_spin(const Bits& bits);

/// Exact sample correlation (1/L) * sum s_i * t_i. Lengths must match and be
/// a power of two, so the result is a dyadic.
Dyadic correlation(const BitString& s, const BitString& t);

/// Negates the entries at positions ceil(j/f), j = 1, 2, ... (1-indexed),
/// i.e. every (1/f)-th entry; f = 0 is the identity. When length * f is an
/// integer, exactly that many entries are negated.
BitString flip_fraction(const BitString& s, const Dyadic& f);

/// Number of positions flip_fraction(., f) negates at the given length.
std::uint64_t flip_count(std::uint64_t length, const Dyadic& f);

/// Exact mean of the entries. Rational so that every length is supported;
/// the value is dyadic whenever the length is a power of two.
BigRational balance(const BitString& s);

}  // namespace granular
