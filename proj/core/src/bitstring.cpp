#include "granular/bitstring.hpp"

#include <bit>

#include "granular/errors.hpp"

namespace granular {

BitString BitString::ones(std::size_t n) {
  Bits b(n);
  b.flip_all();
  return BitString(std::move(b));
}

BitString BitString::minus_ones(std::size_t n) { return BitString(Bits(n)); }

BitString BitString::negated() const {
  Bits b = bits_;
  b.flip_all();
  return BitString(std::move(b));
}

BitString to_spin(const Bits& bits) { return BitString(bits); }

Dyadic correlation(const BitString& s, const BitString& t) {
  if (s.size() != t.size()) throw LengthMismatch("correlation: lengths differ");
  std::size_t n = s.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw LengthMismatch("correlation: length must be a power of two");
  }
  // s_i * t_i = +1 exactly when the packed bits agree.
  std::uint64_t mismatches = 0;
  const auto& a = s.bits().words();
  const auto& b = t.bits().words();
  for (std::size_t i = 0; i < a.size(); ++i) {
    mismatches += std::popcount(a[i] ^ b[i]);
  }
  unsigned log2n = std::countr_zero(n);
  return Dyadic(BigInt(static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(mismatches)),
                log2n);
}

std::uint64_t flip_count(std::uint64_t length, const Dyadic& f) {
  if (f.sign() < 0 || f > Dyadic(1)) throw InvalidParametrization("fraction must lie in [0, 1]");
  if (f.is_zero()) return 0;
  // positions are ceil(j * 2^q / p) <= length, i.e. j <= length * f
  BigInt max_j = (BigInt(length) * f.numerator()) >> f.scale();
  return max_j.convert_to<std::uint64_t>();
}

BitString flip_fraction(const BitString& s, const Dyadic& f) {
  if (f.sign() < 0 || f > Dyadic(1)) throw InvalidParametrization("fraction must lie in [0, 1]");
  Bits b = s.bits();
  if (f.is_zero()) return BitString(std::move(b));
  const std::uint64_t length = s.size();
  if (f.scale() <= 40) {
    std::uint64_t p = f.numerator().convert_to<std::uint64_t>();
    std::uint64_t two_q = std::uint64_t(1) << f.scale();
    for (std::uint64_t j = 1;; ++j) {
      unsigned __int128 pos = ((unsigned __int128)j * two_q + p - 1) / p;
      if (pos > length) break;
      b.flip(static_cast<std::size_t>(pos) - 1);  // rule is 1-indexed
    }
  } else {
    BigInt p = f.numerator();
    BigInt two_q = pow2(f.scale());
    for (BigInt j = 1;; ++j) {
      BigInt pos = (j * two_q + p - 1) / p;
      if (pos > length) break;
      b.flip(pos.convert_to<std::size_t>() - 1);
    }
  }
  return BitString(std::move(b));
}

BigRational balance(const BitString& s) {
  if (s.size() == 0) throw InvalidParametrization("balance of an empty string");
  std::uint64_t plus = 0;
  for (std::uint64_t w : s.bits().words()) plus += std::popcount(w);
  std::int64_t sum = 2 * static_cast<std::int64_t>(plus) - static_cast<std::int64_t>(s.size());
  return BigRational(sum, s.size());
}

}  // namespace granular
