#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace granular {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Strict vs. permissive handling of values whose binary scale is finer than
// the active grid: strict rejects (ScaleTooFine), permissive rounds and flags.
enum class Exactness { strict, permissive };

inline BigInt pow2(unsigned k) {
  BigInt r = 1;
  return r << k;
}

inline bool is_power_of_two(const BigInt& n) {
  if (n <= 0) return false;
  return boost::multiprecision::lsb(n) == boost::multiprecision::msb(n);
}

// Dyadic rationals are exactly the rationals whose reduced denominator is a
// power of two.
inline bool is_dyadic(const BigRational& q) {
  return is_power_of_two(BigInt(boost::multiprecision::denominator(q)));
}

}  // namespace granular
