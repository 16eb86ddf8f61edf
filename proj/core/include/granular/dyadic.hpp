#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "granular/numeric.hpp"

namespace granular {

/// Exact rational with a power-of-two denominator: value = numerator / 2^scale.
///
/// Canonical form: numerator odd, or scale == 0. Addition, multiplication and
/// negation are closed and exact; comparison is exact. Values are immutable
/// after construction.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Dyadic(BigInt numerator, unsigned scale) : num_(std::move(numerator)), scale_(scale) {
    canonicalize();
  }

  /// Exact conversion; nullopt when the reduced denominator is not a power of two.
  static std::optional<Dyadic> from_rational(const BigRational& q);

  /// Accepts "m", "m/d" with d a power of two, and "m/2^k". Throws ParseError.
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  unsigned scale() const { return scale_; }
  bool is_integer() const { return scale_ == 0; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  BigRational to_rational() const;
  double to_double() const;

  /// "m" for integers, "m/d" with a decimal power-of-two denominator while it
  /// fits, "m/2^k" beyond that. Stable across runs.
  std::string str() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(-num_, scale_); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.scale_ == b.scale_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

  static int cmp(const Dyadic& a, const Dyadic& b);

 private:
  void canonicalize();

  BigInt num_ = 0;
  unsigned scale_ = 0;
};

inline Dyadic abs(const Dyadic& d) { return d.sign() < 0 ? -d : d; }

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

}  // namespace granular
