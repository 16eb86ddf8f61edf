#include "granular/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "granular/errors.hpp"

namespace granular {

void Dyadic::canonicalize() {
  if (num_ == 0) {
    scale_ = 0;
    return;
  }
  while (scale_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --scale_;
  }
}

std::optional<Dyadic> Dyadic::from_rational(const BigRational& q) {
  BigInt den = boost::multiprecision::denominator(q);
  if (!is_power_of_two(den)) return std::nullopt;
  unsigned k = den == 1 ? 0 : boost::multiprecision::lsb(den);
  return Dyadic(BigInt(boost::multiprecision::numerator(q)), k);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty integer");
  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("sign without digits");
  BigInt v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("bad digit in integer: " + std::string(s));
    v = v * 10 + (c - '0');
  }
  return neg ? -v : v;
}

}  // namespace

Dyadic Dyadic::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_int(text), 0);

  BigInt num = parse_int(text.substr(0, slash));
  std::string_view den = trim(text.substr(slash + 1));
  if (den.rfind("2^", 0) == 0) {
    BigInt k = parse_int(den.substr(2));
    if (k < 0 || k > 1u << 24) throw ParseError("scale out of range");
    return Dyadic(num, static_cast<unsigned>(k));
  }
  BigInt d = parse_int(den);
  if (!is_power_of_two(d)) throw ParseError("denominator is not a power of two: " + std::string(den));
  unsigned k = d == 1 ? 0 : boost::multiprecision::lsb(d);
  return Dyadic(num, k);
}

BigRational Dyadic::to_rational() const { return BigRational(num_, pow2(scale_)); }

double Dyadic::to_double() const {
  return num_.convert_to<double>() / pow2(scale_).convert_to<double>();
}

std::string Dyadic::str() const {
  if (scale_ == 0) return num_.str();
  if (scale_ <= 62) {
    return num_.str() + "/" + pow2(scale_).str();
  }
  return num_.str() + "/2^" + std::to_string(scale_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned k = std::max(a.scale_, b.scale_);
  return Dyadic(a.num_ * pow2(k - a.scale_) + b.num_ * pow2(k - b.scale_), k);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.scale_ + b.scale_);
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
  unsigned k = std::max(a.scale_, b.scale_);
  BigInt lhs = a.num_ * pow2(k - a.scale_);
  BigInt rhs = b.num_ * pow2(k - b.scale_);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

}  // namespace granular
