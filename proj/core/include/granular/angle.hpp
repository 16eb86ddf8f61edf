#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "granular/dyadic.hpp"
#include "granular/numeric.hpp"

namespace granular {

/// Angle theta = (m/2^k) * pi, stored reduced mod 2*pi so 0 <= m/2^k < 2.
/// Canonical form: m odd or k == 0.
class AnglePi {
 public:
  AnglePi() = default;
  AnglePi(BigInt m, unsigned k);

  static AnglePi zero() { return AnglePi(0, 0); }
  static AnglePi quarter() { return AnglePi(1, 1); }        // pi/2
  static AnglePi half() { return AnglePi(1, 0); }           // pi
  static AnglePi three_quarter() { return AnglePi(3, 1); }  // 3*pi/2

  /// Accepts "m/2^k pi" and "m/d pi" (d a power of two); "pi" may be omitted.
  static AnglePi parse(std::string_view text);

  const BigInt& m() const { return m_; }
  unsigned k() const { return k_; }

  /// The dyadic m/2^k in [0, 2); theta = turns_of_pi() * pi.
  Dyadic turns_of_pi() const { return Dyadic(m_, k_); }

  AnglePi antipode() const { return *this + half(); }

  friend AnglePi operator+(const AnglePi& a, const AnglePi& b);
  friend AnglePi operator-(const AnglePi& a, const AnglePi& b);

  friend bool operator==(const AnglePi& a, const AnglePi& b) {
    return a.m_ == b.m_ && a.k_ == b.k_;
  }
  friend bool operator!=(const AnglePi& a, const AnglePi& b) { return !(a == b); }

  std::string str() const;

 private:
  BigInt m_ = 0;  // in [0, 2^(k+1))
  unsigned k_ = 0;
};

/// Angle identified by its exact cosine c (a dyadic in [-1, 1]) and the sign
/// of its sine. sin_sign == 0 iff |c| == 1; every value names one angle in
/// [0, 2*pi).
class AngleCos {
 public:
  AngleCos(Dyadic c, int sin_sign);

  /// Accepts "cos=m/2^k,sin=+|-|0" and bare dyadic text (sine sign defaults
  /// to + where it is free).
  static AngleCos parse(std::string_view text);

  const Dyadic& cos() const { return c_; }
  int sin_sign() const { return sin_sign_; }

  bool is_four_point() const;  // theta in {0, pi/2, pi, 3*pi/2}

  friend bool operator==(const AngleCos& a, const AngleCos& b) {
    return a.c_ == b.c_ && a.sin_sign_ == b.sin_sign_;
  }
  friend bool operator!=(const AngleCos& a, const AngleCos& b) { return !(a == b); }

  std::string str() const;

 private:
  Dyadic c_;
  int sin_sign_ = 0;
};

/// Exact cosine of a dyadic-multiple-of-pi angle. A value exists only at
/// {0, pi/2, pi, 3*pi/2}; every other angle returns nullopt (its cosine is
/// provably not dyadic). The nullopt is informative, not a fault.
std::optional<Dyadic> cos_exact(const AnglePi& a);

/// Converts a cosine-identified angle to a dyadic multiple of pi. Succeeds
/// exactly when c is 1, 0 or -1; nullopt means the two encodings are
/// incommensurable.
std::optional<AnglePi> angle_to_pi(const AngleCos& a);

/// AngleCos form of the four exactly-shared angles; throws IndexOutOfRange
/// off the four-point set.
AngleCos four_point_to_cos(const AnglePi& a);

/// Exact cosine/sine of theta + delta for a four-point delta, when the result
/// is itself representable. nullopt = not representable with a dyadic cosine.
std::optional<AngleCos> shift_by_four_point(const AngleCos& theta, const AnglePi& delta);

/// 3*theta, exactly: cos(3t) = 4cos^3(t) - 3cos(t), sine sign via
/// sin(3t) = sin(t)(4cos^2(t) - 1).
AngleCos triple_angle(const AngleCos& theta);

/// Rational cosine/sine pair from a Pythagorean parametrization:
/// (2uv/(u^2+v^2), (u^2-v^2)/(u^2+v^2)). Requires u > v > 0 coprime and of
/// opposite parity; then u^2+v^2 is odd, so neither component is dyadic.
struct PythPair {
  BigRational cos;
  BigRational sin;
};
PythPair pyth_pair(const BigInt& u, const BigInt& v);

}  // namespace granular
