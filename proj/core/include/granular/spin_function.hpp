#pragma once

#include <cstdint>
#include <optional>

#include "granular/angle.hpp"
#include "granular/bitstring.hpp"

namespace granular {

/// Partial map from circle angles to {+1, -1}. Values are stored on the grid
/// lambda_n = (n-1) * pi / 2^level, n = 1..2^level, and extend to antipodes
/// by negation: S(lambda + pi) = -S(lambda). Angles of scale finer than the
/// level are outside the domain (eval returns nullopt).
class SpinFunction {
 public:
  SpinFunction(unsigned level, BitString values);

  unsigned level() const { return level_; }
  const BitString& values() const { return values_; }

  std::optional<int> eval(const AnglePi& angle) const;

 private:
  unsigned level_;
  BitString values_;
};

/// S_0 from the Champernowne segment starting at `offset`, via a = 2c - 1.
SpinFunction build_s0(unsigned level, std::uint64_t offset = 0);

/// S_theta: flip every 1/sin^2(theta/2)-th value of s0, i.e. a fraction
/// f = (1 - cos theta)/2. Exact (the flipped count is exactly 2^level * f)
/// iff f's scale is at most the level; strict mode rejects finer scales.
struct BuiltSpin {
  SpinFunction fn;
  bool exact;
};
BuiltSpin build_stheta(const SpinFunction& s0, const AngleCos& theta,
                       Exactness mode = Exactness::strict);

}  // namespace granular
