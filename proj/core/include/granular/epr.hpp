#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "granular/angle.hpp"
#include "granular/spin_function.hpp"

namespace granular {

/// One point of the correlation curve C(theta) = <S_0(lambda) S_theta(lambda + pi)>.
struct CurvePoint {
  AngleCos theta;
  Dyadic measured;
  Dyadic expected;  // -cos(theta)
  bool exact;
};
std::vector<CurvePoint> corr_curve(const SpinFunction& s0, const std::vector<AngleCos>& thetas,
                                   Exactness mode = Exactness::strict);

/// Detector-orientation schedule: disjoint ordered time intervals, each with
/// an exact relative orientation and a number of entangled pairs.
struct ScheduleInterval {
  double t_begin;
  double t_end;
  AngleCos theta;
  std::uint64_t pairs;
};
struct RealitySchedule {
  std::vector<ScheduleInterval> intervals;
};

struct IntervalResult {
  ScheduleInterval interval;
  std::int64_t product_sum;  // sum of S_0(lambda) * S_theta(lambda + pi)
  BigRational correlation;
  Dyadic expected;  // -cos(theta)
  bool exact;       // correlation == expected
  bool flips_exact;
  std::vector<std::pair<int, int>> outcomes;  // only when requested
};

/// One concrete run: lambda sweeps the grid sequentially (wrapping), pairs
/// are read off S_0 and S_theta, and per-interval empirical correlations are
/// reported. With `subset_seed` set, lambda is drawn from a seeded uniform
/// generator instead (subset statistics). Realities always seed from the base
/// segment at `offset`; `keep_outcomes` retains the per-pair outcome lists.
struct RealityRecord {
  unsigned level;
  std::uint64_t offset;
  std::vector<IntervalResult> intervals;
};
RealityRecord run_reality(const RealitySchedule& schedule, unsigned level, std::uint64_t offset,
                          Exactness mode = Exactness::strict,
                          std::optional<std::uint64_t> subset_seed = std::nullopt,
                          bool keep_outcomes = false);

/// Counterfactual spin values Sp1(d1, lambda) = S_0(lambda - d1) and
/// Sp2(d2, lambda) = -S_theta(lambda - d2). nullopt encodes an undefined
/// counterfactual (the perturbed angle is off the grid), not a fault.
std::optional<int> sp1(const AnglePi& d1, const AnglePi& lambda, const SpinFunction& s0);
std::optional<int> sp2(const AnglePi& d2, const AnglePi& lambda, const SpinFunction& s_theta);

/// A hypothetical detector perturbation: either an exact dyadic multiple of
/// pi, or "align with this orientation" where the orientation is known by its
/// cosine and may not convert.
class PerturbationRequest {
 public:
  static PerturbationRequest exact(AnglePi angle);
  static PerturbationRequest align(AngleCos target);

  bool is_exact() const { return exact_.has_value(); }
  const AnglePi& angle() const { return *exact_; }
  const AngleCos& target() const { return *align_; }

  /// The AnglePi to evaluate at; nullopt when alignment is incommensurable.
  std::optional<AnglePi> resolve() const;

  std::string str() const;

 private:
  PerturbationRequest() = default;
  std::optional<AnglePi> exact_;
  std::optional<AngleCos> align_;
};

struct DefinednessReport {
  AnglePi lambda;
  std::string d1;
  std::string d2;
  AngleCos theta;
  bool sp1_defined;
  bool sp2_defined;
  std::optional<AngleCos> relative;  // cos of theta + (d2 - d1) when representable
  bool relative_cos_dyadic;
  std::vector<std::string> reasons;
};
DefinednessReport definedness(const AnglePi& lambda, const PerturbationRequest& d1,
                              const PerturbationRequest& d2, const AngleCos& theta,
                              unsigned level);

/// Instantiates the anti-correlation reality condition
/// Sp1(theta_A, lambda) = -Sp2(0, lambda) across the grid and reports the
/// fraction of lambda where both sides are defined. Fraction zero marks the
/// inequality derivation as blocked.
struct RealityConditionReport {
  AngleCos theta_a;
  unsigned level;
  std::uint64_t grid_points;
  std::uint64_t defined_points;
  BigRational defined_fraction;
  bool derivation_blocked;
  std::uint64_t agreeing_points;  // where both sides are defined and equal
};
RealityConditionReport reality_condition_check(const AngleCos& theta_a, unsigned level,
                                               std::uint64_t offset = 0);

/// Best dyadic-multiple-of-pi approximation to the angle at the given scale
/// (round to nearest, ties to even). High-precision trigonometric rounding.
AnglePi best_pi_approximation(const AngleCos& theta, unsigned scale);

/// Sp1 along a sequence of sharpening approximations theta^(j) -> theta_A.
struct CauchyProbe {
  std::vector<unsigned> scales;
  std::vector<AnglePi> approximants;
  std::vector<int> values;

  bool tail_constant(unsigned window = 8) const;
};
CauchyProbe cauchy_probe(const AngleCos& theta_a, const AnglePi& lambda, unsigned j_min,
                         unsigned j_max, const SpinFunction& s0);

/// The four-correlation combination S = C(a,b) - C(a,b') + C(a',b) + C(a',b'),
/// each correlation from its own independently run reality (fresh Champernowne
/// segment). Law values use C(theta) = -cos(theta) exactly.
struct ChshRun {
  AngleCos theta;
  Dyadic c_law;
  Dyadic c_measured;
  bool exact;
};
struct ChshResult {
  std::array<ChshRun, 4> runs;
  Dyadic s_law;
  Dyadic s_measured;
  bool all_exact;
};
ChshResult chsh(const std::array<AngleCos, 4>& settings, unsigned level, std::uint64_t offset = 0,
                Exactness mode = Exactness::strict);

}  // namespace granular
