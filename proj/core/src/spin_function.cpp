#include "granular/spin_function.hpp"

#include "granular/errors.hpp"

namespace granular {

SpinFunction::SpinFunction(unsigned level, BitString values)
    : level_(level), values_(std::move(values)) {
  if (level_ > 30) throw LimitExceeded("spin function level out of range");
  if (values_.size() != (std::size_t(1) << level_)) {
    throw LengthMismatch("spin function needs 2^level values");
  }
}

std::optional<int> SpinFunction::eval(const AnglePi& angle) const {
  if (angle.k() > level_) return std::nullopt;  // off the grid
  // full-circle index j in [0, 2^(level+1)): angle = j * pi / 2^level
  BigInt j = angle.m() * pow2(level_ - angle.k());
  std::uint64_t idx = j.convert_to<std::uint64_t>();
  const std::uint64_t half_points = std::uint64_t(1) << level_;
  if (idx < half_points) return values_.entry(idx);
  return -values_.entry(idx - half_points);
}

SpinFunction build_s0(unsigned level, std::uint64_t offset) {
  return SpinFunction(level, to_spin(champernowne_bits(std::size_t(1) << level, offset)));
}

BuiltSpin build_stheta(const SpinFunction& s0, const AngleCos& theta, Exactness mode) {
  Dyadic f = (Dyadic(1) - theta.cos()) * Dyadic(1, 1);  // sin^2(theta/2)
  bool exact = f.scale() <= s0.level();
  if (!exact && mode == Exactness::strict) {
    throw ScaleTooFine("flip fraction scale " + std::to_string(f.scale()) +
                       " too fine for level " + std::to_string(s0.level()));
  }
  return BuiltSpin{SpinFunction(s0.level(), flip_fraction(s0.values(), f)), exact};
}

}  // namespace granular
