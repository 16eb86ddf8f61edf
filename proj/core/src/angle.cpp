#include "granular/angle.hpp"

#include <algorithm>

#include "granular/errors.hpp"

namespace granular {

AnglePi::AnglePi(BigInt m, unsigned k) : m_(std::move(m)), k_(k) {
  BigInt period = pow2(k_ + 1);  // multiples of pi/2^k per full turn
  m_ %= period;
  if (m_ < 0) m_ += period;
  while (k_ > 0 && m_ % 2 == 0) {
    m_ /= 2;
    --k_;
  }
  if (m_ == 0) k_ = 0;
}

AnglePi AnglePi::parse(std::string_view text) {
  auto pos = text.rfind("pi");
  if (pos != std::string_view::npos) text = text.substr(0, pos);
  Dyadic turns = Dyadic::parse(text);
  return AnglePi(turns.numerator(), turns.scale());
}

AnglePi operator+(const AnglePi& a, const AnglePi& b) {
  unsigned k = std::max(a.k_, b.k_);
  return AnglePi(a.m_ * pow2(k - a.k_) + b.m_ * pow2(k - b.k_), k);
}

AnglePi operator-(const AnglePi& a, const AnglePi& b) {
  unsigned k = std::max(a.k_, b.k_);
  return AnglePi(a.m_ * pow2(k - a.k_) - b.m_ * pow2(k - b.k_), k);
}

std::string AnglePi::str() const { return turns_of_pi().str() + " pi"; }

AngleCos::AngleCos(Dyadic c, int sin_sign) : c_(std::move(c)), sin_sign_(sin_sign) {
  if (c_ < Dyadic(-1) || c_ > Dyadic(1)) {
    throw InvalidParametrization("cosine out of [-1, 1]: " + c_.str());
  }
  bool extremal = c_ == Dyadic(1) || c_ == Dyadic(-1);
  if (extremal != (sin_sign_ == 0)) {
    throw InvalidParametrization("sin sign must be 0 exactly when |cos| = 1");
  }
  if (sin_sign_ < -1 || sin_sign_ > 1) {
    throw InvalidParametrization("sin sign must be one of -1, 0, +1");
  }
}

AngleCos AngleCos::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.rfind("cos=", 0) == 0) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected cos=...,sin=...");
    Dyadic c = Dyadic::parse(text.substr(4, comma - 4));
    std::string_view rest = trim(text.substr(comma + 1));
    if (rest.rfind("sin=", 0) != 0 || rest.size() != 5) throw ParseError("expected sin=+|-|0");
    char s = rest[4];
    int sign = s == '+' ? 1 : s == '-' ? -1 : s == '0' ? 0 : 2;
    if (sign == 2) throw ParseError("expected sin=+|-|0");
    return AngleCos(c, sign);
  }
  Dyadic c = Dyadic::parse(text);
  bool extremal = c == Dyadic(1) || c == Dyadic(-1);
  return AngleCos(c, extremal ? 0 : 1);
}

bool AngleCos::is_four_point() const {
  return c_ == Dyadic(1) || c_ == Dyadic(-1) || c_.is_zero();
}

std::string AngleCos::str() const {
  const char* s = sin_sign_ > 0 ? "+" : sin_sign_ < 0 ? "-" : "0";
  return "cos=" + c_.str() + ",sin=" + s;
}

std::optional<Dyadic> cos_exact(const AnglePi& a) {
  // The only dyadic multiples of pi with dyadic cosine are 0, pi/2, pi and
  // 3*pi/2 (classification extended from the first quadrant by symmetry).
  if (a == AnglePi::zero()) return Dyadic(1);
  if (a == AnglePi::quarter()) return Dyadic(0);
  if (a == AnglePi::half()) return Dyadic(-1);
  if (a == AnglePi::three_quarter()) return Dyadic(0);
  return std::nullopt;
}

std::optional<AnglePi> angle_to_pi(const AngleCos& a) {
  if (a.cos() == Dyadic(1)) return AnglePi::zero();
  if (a.cos() == Dyadic(-1)) return AnglePi::half();
  if (a.cos().is_zero()) {
    return a.sin_sign() > 0 ? AnglePi::quarter() : AnglePi::three_quarter();
  }
  return std::nullopt;  // incommensurable with the pi-grid
}

AngleCos four_point_to_cos(const AnglePi& a) {
  if (a == AnglePi::zero()) return AngleCos(Dyadic(1), 0);
  if (a == AnglePi::quarter()) return AngleCos(Dyadic(0), 1);
  if (a == AnglePi::half()) return AngleCos(Dyadic(-1), 0);
  if (a == AnglePi::three_quarter()) return AngleCos(Dyadic(0), -1);
  throw IndexOutOfRange("not a four-point angle: " + a.str());
}

std::optional<AngleCos> shift_by_four_point(const AngleCos& theta, const AnglePi& delta) {
  const Dyadic& c = theta.cos();
  int ss = theta.sin_sign();
  if (delta == AnglePi::zero()) return theta;
  if (delta == AnglePi::half()) return AngleCos(-c, -ss);
  bool quarter = delta == AnglePi::quarter();
  bool three_quarter = delta == AnglePi::three_quarter();
  if (!quarter && !three_quarter) return std::nullopt;

  // cos(theta + pi/2) = -sin(theta): dyadic only when sin(theta) is 0 or +-1.
  int dir = quarter ? 1 : -1;  // 3*pi/2 shifts by -pi/2
  if (ss == 0) {
    // theta in {0, pi}: new cosine 0, new sine sign = dir * cos(theta)
    int new_sign = dir * c.sign();
    return AngleCos(Dyadic(0), new_sign);
  }
  if (c.is_zero()) {
    // theta in {pi/2, 3*pi/2}: new cosine = -dir * sin(theta)
    Dyadic nc = ss * dir > 0 ? Dyadic(-1) : Dyadic(1);
    return AngleCos(nc, 0);
  }
  return std::nullopt;
}

AngleCos triple_angle(const AngleCos& theta) {
  const Dyadic& c = theta.cos();
  Dyadic c3 = Dyadic(4) * c * c * c - Dyadic(3) * c;
  if (c3 == Dyadic(1) || c3 == Dyadic(-1)) return AngleCos(c3, 0);
  Dyadic discriminant = Dyadic(4) * c * c - Dyadic(1);
  int sign = theta.sin_sign() * discriminant.sign();
  if (sign == 0) sign = 1;  // 4c^2 = 1 lands on |cos 3t| = 1, handled above
  return AngleCos(c3, sign);
}

PythPair pyth_pair(const BigInt& u, const BigInt& v) {
  if (!(u > v && v > 0)) throw InvalidParametrization("need u > v > 0");
  if (boost::multiprecision::gcd(u, v) != 1) throw InvalidParametrization("u, v must be coprime");
  if ((u + v) % 2 == 0) throw InvalidParametrization("u, v must have opposite parity");
  BigInt z = u * u + v * v;
  return PythPair{BigRational(2 * u * v, z), BigRational(u * u - v * v, z)};
}

}  // namespace granular
