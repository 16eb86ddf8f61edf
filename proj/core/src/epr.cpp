#include "granular/epr.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "granular/errors.hpp"

namespace granular {

namespace {
using Real = boost::multiprecision::cpp_bin_float_50;
}

std::vector<CurvePoint> corr_curve(const SpinFunction& s0, const std::vector<AngleCos>& thetas,
                                   Exactness mode) {
  std::vector<CurvePoint> out;
  out.reserve(thetas.size());
  for (const AngleCos& theta : thetas) {
    BuiltSpin st = build_stheta(s0, theta, mode);
    // S_theta(lambda + pi) = -S_theta(lambda) on the grid
    Dyadic measured = -correlation(s0.values(), st.fn.values());
    Dyadic expected = -theta.cos();
    out.push_back({theta, measured, expected, measured == expected});
  }
  return out;
}

RealityRecord run_reality(const RealitySchedule& schedule, unsigned level, std::uint64_t offset,
                          Exactness mode, std::optional<std::uint64_t> subset_seed,
                          bool keep_outcomes) {
  if (schedule.intervals.empty()) throw InvalidParametrization("schedule has no intervals");
  for (std::size_t i = 0; i < schedule.intervals.size(); ++i) {
    const auto& iv = schedule.intervals[i];
    if (!(iv.t_begin < iv.t_end)) throw InvalidParametrization("interval times must increase");
    if (iv.pairs == 0) throw InvalidParametrization("interval needs at least one pair");
    if (i > 0 && !(schedule.intervals[i - 1].t_end <= iv.t_begin)) {
      throw InvalidParametrization("intervals must be disjoint and ordered");
    }
  }

  SpinFunction s0 = build_s0(level, offset);
  const std::uint64_t grid = std::uint64_t(1) << level;
  std::uint64_t cursor = 0;  // sequential sweep continues across intervals
  std::optional<std::mt19937_64> rng;
  if (subset_seed) rng.emplace(*subset_seed);

  RealityRecord record{level, offset, {}};
  for (const auto& iv : schedule.intervals) {
    BuiltSpin st = build_stheta(s0, iv.theta, mode);
    std::int64_t sum = 0;
    std::vector<std::pair<int, int>> outcomes;
    if (keep_outcomes) outcomes.reserve(iv.pairs);
    for (std::uint64_t p = 0; p < iv.pairs; ++p) {
      std::uint64_t n = rng ? (*rng)() % grid : cursor++ % grid;
      // outcome pair (S_0(lambda_n), S_theta(lambda_n + pi))
      int a = s0.values().entry(n);
      int b = -st.fn.values().entry(n);
      sum += a * b;
      if (keep_outcomes) outcomes.emplace_back(a, b);
    }
    BigRational corr(sum, iv.pairs);
    Dyadic expected = -iv.theta.cos();
    record.intervals.push_back(
        {iv, sum, corr, expected, corr == expected.to_rational(), st.exact, std::move(outcomes)});
  }
  return record;
}

std::optional<int> sp1(const AnglePi& d1, const AnglePi& lambda, const SpinFunction& s0) {
  return s0.eval(lambda - d1);
}

std::optional<int> sp2(const AnglePi& d2, const AnglePi& lambda, const SpinFunction& s_theta) {
  auto v = s_theta.eval(lambda - d2);
  if (!v) return std::nullopt;
  return -*v;
}

PerturbationRequest PerturbationRequest::exact(AnglePi angle) {
  PerturbationRequest r;
  r.exact_ = std::move(angle);
  return r;
}

PerturbationRequest PerturbationRequest::align(AngleCos target) {
  PerturbationRequest r;
  r.align_ = std::move(target);
  return r;
}

std::optional<AnglePi> PerturbationRequest::resolve() const {
  if (exact_) return exact_;
  return angle_to_pi(*align_);
}

std::string PerturbationRequest::str() const {
  if (exact_) return exact_->str();
  return "align(" + align_->str() + ")";
}

DefinednessReport definedness(const AnglePi& lambda, const PerturbationRequest& d1,
                              const PerturbationRequest& d2, const AngleCos& theta,
                              unsigned level) {
  DefinednessReport report{lambda, d1.str(), d2.str(), theta, false, false,
                           std::nullopt, false, {}};

  auto r1 = d1.resolve();
  auto r2 = d2.resolve();
  if (!r1) report.reasons.push_back("sp1: alignment target incommensurable with the pi-grid");
  if (!r2) report.reasons.push_back("sp2: alignment target incommensurable with the pi-grid");

  if (r1) {
    report.sp1_defined = (lambda - *r1).k() <= level;
    if (!report.sp1_defined) report.reasons.push_back("sp1: perturbed angle off the grid");
  }
  if (r2) {
    report.sp2_defined = (lambda - *r2).k() <= level;
    if (!report.sp2_defined) report.reasons.push_back("sp2: perturbed angle off the grid");
  }

  if (r1 && r2) {
    report.relative = shift_by_four_point(theta, *r2 - *r1);
    report.relative_cos_dyadic = report.relative.has_value();
    if (!report.relative) {
      report.reasons.push_back("relative orientation cosine not dyadic");
    }
  }
  return report;
}

RealityConditionReport reality_condition_check(const AngleCos& theta_a, unsigned level,
                                               std::uint64_t offset) {
  const std::uint64_t grid = std::uint64_t(1) << level;
  RealityConditionReport report{theta_a, level, grid, 0, BigRational(0), true, 0};

  auto aligned = angle_to_pi(theta_a);
  if (!aligned) {
    // Sp1(theta_A, .) is undefined for every grid lambda: the per-pair
    // anti-correlation condition cannot even be instantiated.
    return report;
  }

  SpinFunction s0 = build_s0(level, offset);
  BuiltSpin st = build_stheta(s0, theta_a, Exactness::permissive);
  for (std::uint64_t n = 0; n < grid; ++n) {
    AnglePi lambda(BigInt(n), level);
    auto lhs = sp1(*aligned, lambda, s0);
    auto rhs = sp2(AnglePi::zero(), lambda, st.fn);
    if (lhs && rhs) {
      ++report.defined_points;
      if (*lhs == -*rhs) ++report.agreeing_points;
    }
  }
  report.defined_fraction = BigRational(report.defined_points, grid);
  report.derivation_blocked = report.defined_points == 0;
  return report;
}

AnglePi best_pi_approximation(const AngleCos& theta, unsigned scale) {
  Real c(theta.cos().numerator().str());
  c = ldexp(c, -static_cast<int>(theta.cos().scale()));
  Real pi = acos(Real(-1));
  Real turns = acos(c) / pi;  // in [0, 1]
  if (theta.sin_sign() < 0) turns = Real(2) - turns;
  Real scaled = ldexp(turns, static_cast<int>(scale));
  Real whole = floor(scaled);
  Real frac = scaled - whole;
  BigInt m(whole.convert_to<BigInt>());
  if (frac > Real(0.5) || (frac == Real(0.5) && m % 2 != 0)) ++m;
  return AnglePi(m, scale);
}

bool CauchyProbe::tail_constant(unsigned window) const {
  if (values.empty()) return true;
  std::size_t start = values.size() > window ? values.size() - window : 0;
  for (std::size_t i = start + 1; i < values.size(); ++i) {
    if (values[i] != values[start]) return false;
  }
  return true;
}

CauchyProbe cauchy_probe(const AngleCos& theta_a, const AnglePi& lambda, unsigned j_min,
                         unsigned j_max, const SpinFunction& s0) {
  if (j_min < 1 || j_min > j_max || j_max > s0.level()) {
    throw InvalidParametrization("approximation scales must satisfy 1 <= j_min <= j_max <= level");
  }
  CauchyProbe probe;
  for (unsigned j = j_min; j <= j_max; ++j) {
    AnglePi approx = best_pi_approximation(theta_a, j);
    auto value = sp1(approx, lambda, s0);
    if (!value) throw LimitExceeded("approximant fell off the grid");  // cannot happen for j <= level
    probe.scales.push_back(j);
    probe.approximants.push_back(approx);
    probe.values.push_back(*value);
  }
  return probe;
}

ChshResult chsh(const std::array<AngleCos, 4>& settings, unsigned level, std::uint64_t offset,
                Exactness mode) {
  const std::uint64_t grid = std::uint64_t(1) << level;
  std::array<ChshRun, 4> runs = {ChshRun{settings[0], Dyadic(0), Dyadic(0), false},
                                 ChshRun{settings[1], Dyadic(0), Dyadic(0), false},
                                 ChshRun{settings[2], Dyadic(0), Dyadic(0), false},
                                 ChshRun{settings[3], Dyadic(0), Dyadic(0), false}};
  for (int i = 0; i < 4; ++i) {
    // each correlation comes from its own full-grid reality on a fresh segment
    RealitySchedule schedule{{{double(i), double(i) + 1, settings[i], grid}}};
    RealityRecord rec = run_reality(schedule, level, offset + std::uint64_t(i) * grid, mode);
    const IntervalResult& iv = rec.intervals[0];
    runs[i].c_law = -settings[i].cos();
    runs[i].c_measured = Dyadic(BigInt(iv.product_sum), level);
    runs[i].exact = iv.exact;
  }
  Dyadic s_law = runs[0].c_law - runs[1].c_law + runs[2].c_law + runs[3].c_law;
  Dyadic s_measured =
      runs[0].c_measured - runs[1].c_measured + runs[2].c_measured + runs[3].c_measured;
  bool all_exact = runs[0].exact && runs[1].exact && runs[2].exact && runs[3].exact;
  return ChshResult{runs, s_law, s_measured, all_exact};
}

}  // namespace granular
