#include <doctest.h>

#include <array>

#include "granular/epr.hpp"
#include "granular/errors.hpp"

using namespace granular;

TEST_CASE("s0 construction") {
  SpinFunction s0 = build_s0(4, 0);
  CHECK(s0.eval(AnglePi::zero()) == 1);  // first Champernowne bit is 1
  // antipodes negate across the whole grid
  for (int n = 0; n < 16; ++n) {
    AnglePi lambda(n, 4);
    CHECK(*s0.eval(lambda.antipode()) == -*s0.eval(lambda));
  }
  SpinFunction other = build_s0(4, 3);
  CHECK(!(other.values() == s0.values()));
}

TEST_CASE("spin functions are partial maps") {
  SpinFunction s0 = build_s0(3, 0);
  CHECK(s0.eval(AnglePi(1, 3)).has_value());
  CHECK(!s0.eval(AnglePi(1, 4)).has_value());  // off the grid
  CHECK(!s0.eval(AnglePi(5, 6)).has_value());
}

TEST_CASE("s_theta flips the stated fraction") {
  SpinFunction s0 = build_s0(4, 0);
  BuiltSpin quarter = build_stheta(s0, AngleCos(Dyadic(0), 1));
  CHECK(quarter.exact);
  CHECK(quarter.fn.values() == flip_fraction(s0.values(), Dyadic(1, 1)));
  BuiltSpin pi = build_stheta(s0, AngleCos(Dyadic(-1), 0));
  CHECK(pi.fn.values() == s0.values().negated());
  BuiltSpin zero = build_stheta(s0, AngleCos(Dyadic(1), 0));
  CHECK(zero.fn.values() == s0.values());
  // scale finer than the grid
  CHECK_THROWS_AS(build_stheta(s0, AngleCos(Dyadic(1, 6), 1)), ScaleTooFine);
  BuiltSpin rounded = build_stheta(s0, AngleCos(Dyadic(1, 6), 1), Exactness::permissive);
  CHECK(!rounded.exact);
}

TEST_CASE("correlation curve equals minus cosine exactly") {
  SpinFunction s0 = build_s0(8, 0);
  std::vector<AngleCos> thetas = {AngleCos(Dyadic(-1), 0), AngleCos(Dyadic(0), 1),
                                  AngleCos(Dyadic(3, 2), 1), AngleCos(Dyadic(-3, 2), 1),
                                  AngleCos(Dyadic(1), 0)};
  auto curve = corr_curve(s0, thetas);
  CHECK(curve[0].measured == Dyadic(1));
  CHECK(curve[1].measured == Dyadic(0));
  CHECK(curve[2].measured == Dyadic(-3, 2));
  CHECK(curve[3].measured == Dyadic(3, 2));
  CHECK(curve[4].measured == Dyadic(-1));
  for (const auto& p : curve) {
    CHECK(p.exact);
    CHECK(p.measured == -p.theta.cos());
  }
}

TEST_CASE("the exact correlation law holds across levels") {
  // every representable flip fraction gives C(theta) = -cos(theta) with no
  // tolerance, independent of the segment content
  for (unsigned level : {8u, 12u, 16u, 20u}) {
    SpinFunction s0 = build_s0(level, 2 * level + 1);
    std::vector<AngleCos> thetas = {AngleCos(Dyadic(3, 2), 1), AngleCos(Dyadic(-5, 3), 1),
                                    AngleCos(Dyadic(1, 1), -1), AngleCos(Dyadic(0), 1),
                                    AngleCos(Dyadic(127, 7), 1)};
    for (const auto& p : corr_curve(s0, thetas)) {
      CHECK(p.exact);
      CHECK(p.measured == -p.theta.cos());
    }
  }
}

TEST_CASE("specific realities") {
  const unsigned level = 6;
  const std::uint64_t grid = 64;
  SUBCASE("single interval, opposite detectors") {
    RealitySchedule sched{{{0.0, 1.0, AngleCos(Dyadic(-1), 0), grid}}};
    RealityRecord rec = run_reality(sched, level, 0);
    CHECK(rec.intervals[0].correlation == BigRational(1));
    CHECK(rec.intervals[0].exact);
  }
  SUBCASE("single interval, orthogonal detectors over the full grid") {
    RealitySchedule sched{{{0.0, 1.0, AngleCos(Dyadic(0), 1), grid}}};
    RealityRecord rec = run_reality(sched, level, 0);
    CHECK(rec.intervals[0].correlation == BigRational(0));
  }
  SUBCASE("two intervals reproduce both correlations") {
    RealitySchedule sched{{{0.0, 1.0, AngleCos(Dyadic(1, 1), 1), grid},
                           {2.0, 3.0, AngleCos(Dyadic(-1, 2), 1), 2 * grid}}};
    RealityRecord rec = run_reality(sched, level, 5);
    CHECK(rec.intervals[0].correlation == BigRational(-1, 2));
    CHECK(rec.intervals[1].correlation == BigRational(1, 4));
    CHECK(rec.intervals[0].exact);
    CHECK(rec.intervals[1].exact);  // wrapped second sweep still covers the grid evenly
  }
  SUBCASE("subset sampling is seeded and deterministic") {
    RealitySchedule sched{{{0.0, 1.0, AngleCos(Dyadic(1, 1), 1), 40}}};
    RealityRecord a = run_reality(sched, level, 0, Exactness::strict, 7u);
    RealityRecord b = run_reality(sched, level, 0, Exactness::strict, 7u);
    CHECK(a.intervals[0].product_sum == b.intervals[0].product_sum);
  }
  SUBCASE("outcome pairs can be retained") {
    RealitySchedule sched{{{0.0, 1.0, AngleCos(Dyadic(0), 1), grid}}};
    RealityRecord rec = run_reality(sched, level, 0, Exactness::strict, std::nullopt, true);
    const auto& iv = rec.intervals[0];
    REQUIRE(iv.outcomes.size() == grid);
    std::int64_t sum = 0;
    for (auto [a, b] : iv.outcomes) sum += a * b;
    CHECK(sum == iv.product_sum);
    // the first outcome is (S_0(0), S_theta(pi)) by the sequential sweep
    SpinFunction s0 = build_s0(level, 0);
    CHECK(iv.outcomes[0].first == *s0.eval(AnglePi::zero()));
  }
  SUBCASE("schedule validation") {
    CHECK_THROWS_AS(run_reality(RealitySchedule{}, level, 0), InvalidParametrization);
    RealitySchedule bad{{{1.0, 0.5, AngleCos(Dyadic(0), 1), 4}}};
    CHECK_THROWS_AS(run_reality(bad, level, 0), InvalidParametrization);
    RealitySchedule overlap{{{0.0, 2.0, AngleCos(Dyadic(0), 1), 4},
                             {1.0, 3.0, AngleCos(Dyadic(0), 1), 4}}};
    CHECK_THROWS_AS(run_reality(overlap, level, 0), InvalidParametrization);
  }
}

TEST_CASE("counterfactual spin functions") {
  const unsigned level = 6;
  SpinFunction s0 = build_s0(level, 0);
  BuiltSpin st = build_stheta(s0, AngleCos(Dyadic(1, 1), 1));

  SUBCASE("zero perturbation reproduces the reality") {
    for (int n = 0; n < 64; n += 5) {
      AnglePi lambda(n, level);
      CHECK(sp1(AnglePi::zero(), lambda, s0) == s0.eval(lambda));
      CHECK(sp2(AnglePi::zero(), lambda, st.fn) == st.fn.eval(lambda.antipode()));
    }
  }
  SUBCASE("identical perturbations leave the correlation invariant") {
    for (const AnglePi& shift : {AnglePi(1, 3), AnglePi(5, 6), AnglePi::quarter()}) {
      long long sum = 0;
      for (int n = 0; n < 64; ++n) {
        AnglePi lambda(n, level);
        auto a = sp1(shift, lambda, s0);
        auto b = sp2(shift, lambda, st.fn);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        sum += *a * *b;
      }
      CHECK(BigRational(sum, 64) == Dyadic(-1, 1).to_rational());  // -cos(theta)
    }
  }
  SUBCASE("off-grid perturbations are undefined") {
    CHECK(!sp1(AnglePi(1, level + 1), AnglePi::zero(), s0).has_value());
    CHECK(!sp2(AnglePi(3, level + 2), AnglePi::quarter(), st.fn).has_value());
  }
}

TEST_CASE("definedness reports") {
  const unsigned level = 6;
  AngleCos theta(Dyadic(3, 2), 1);
  AnglePi lambda(5, level);

  SUBCASE("zero perturbations are fully defined") {
    auto r = definedness(lambda, PerturbationRequest::exact(AnglePi::zero()),
                         PerturbationRequest::exact(AnglePi::zero()), theta, level);
    CHECK(r.sp1_defined);
    CHECK(r.sp2_defined);
    CHECK(r.relative_cos_dyadic);
    CHECK(r.relative == theta);
    CHECK(r.reasons.empty());
  }
  SUBCASE("alignment with a generic orientation never resolves") {
    auto r = definedness(lambda, PerturbationRequest::align(theta),
                         PerturbationRequest::exact(AnglePi::zero()), theta, level);
    CHECK(!r.sp1_defined);
    CHECK(r.sp2_defined);
    CHECK(!r.reasons.empty());
  }
  SUBCASE("matched quarter-turn perturbations keep the relative cosine") {
    auto r = definedness(lambda, PerturbationRequest::exact(AnglePi::quarter()),
                         PerturbationRequest::exact(AnglePi::quarter()), theta, level);
    CHECK(r.sp1_defined);
    CHECK(r.sp2_defined);
    CHECK(r.relative == theta);
  }
}

TEST_CASE("counterfactuals are never simultaneously defined off the four points") {
  // for any orientation whose cosine is not 0 or +-1, aligning detector 1
  // leaves sp1 undefined at every grid pair while sp2 stays defined
  const unsigned level = 6;
  for (const Dyadic& c : {Dyadic(3, 2), Dyadic(1, 1), Dyadic(-5, 3), Dyadic(63, 6)}) {
    AngleCos theta(c, 1);
    for (int n = 0; n < 64; ++n) {
      AnglePi lambda(n, level);
      auto r = definedness(lambda, PerturbationRequest::align(theta),
                           PerturbationRequest::exact(AnglePi::zero()), theta, level);
      CHECK(!r.sp1_defined);
      CHECK(r.sp2_defined);
    }
  }
}

TEST_CASE("reality condition instantiation") {
  const unsigned level = 8;
  SUBCASE("generic cosine blocks the derivation") {
    auto r = reality_condition_check(AngleCos(Dyadic(3, 2), 1), level);
    CHECK(r.defined_points == 0);
    CHECK(r.defined_fraction == BigRational(0));
    CHECK(r.derivation_blocked);
  }
  SUBCASE("four-point orientations instantiate everywhere") {
    auto quarter = reality_condition_check(AngleCos(Dyadic(0), 1), level);
    CHECK(quarter.defined_fraction == BigRational(1));
    CHECK(!quarter.derivation_blocked);
    auto pi = reality_condition_check(AngleCos(Dyadic(-1), 0), level);
    CHECK(pi.defined_fraction == BigRational(1));
    // at theta = pi the anti-correlation condition actually holds pointwise
    CHECK(pi.agreeing_points == pi.grid_points);
  }
}

TEST_CASE("cauchy probes") {
  SUBCASE("four-point targets are reached exactly") {
    SpinFunction s0 = build_s0(10, 0);
    CauchyProbe p = cauchy_probe(AngleCos(Dyadic(0), 1), AnglePi(3, 5), 1, 10, s0);
    for (const AnglePi& a : p.approximants) CHECK(a == AnglePi::quarter());
    CHECK(p.tail_constant());
  }
  SUBCASE("probes are deterministic") {
    SpinFunction s0 = build_s0(12, 0);
    AngleCos theta(Dyadic(3, 2), 1);
    CauchyProbe a = cauchy_probe(theta, AnglePi(7, 4), 2, 12, s0);
    CauchyProbe b = cauchy_probe(theta, AnglePi(7, 4), 2, 12, s0);
    CHECK(a.values == b.values);
    CHECK(a.values.size() == 11);
  }
  SUBCASE("generic targets keep wandering") {
    SpinFunction s0 = build_s0(16, 0);
    AngleCos theta(Dyadic(3, 2), 1);
    unsigned unstable = 0;
    for (int n = 0; n < 16; ++n) {
      CauchyProbe p = cauchy_probe(theta, AnglePi(n * 4096 + 17, 16), 4, 16, s0);
      if (!p.tail_constant()) ++unstable;
    }
    CHECK(unstable >= 12);
  }
  SUBCASE("range validation") {
    SpinFunction s0 = build_s0(6, 0);
    CHECK_THROWS_AS(cauchy_probe(AngleCos(Dyadic(3, 2), 1), AnglePi(1, 3), 0, 6, s0),
                    InvalidParametrization);
    CHECK_THROWS_AS(cauchy_probe(AngleCos(Dyadic(3, 2), 1), AnglePi(1, 3), 2, 7, s0),
                    InvalidParametrization);
  }
}

TEST_CASE("chsh statistics") {
  const unsigned level = 8;
  SUBCASE("all orthogonal settings vanish") {
    std::array<AngleCos, 4> settings = {AngleCos(Dyadic(0), 1), AngleCos(Dyadic(0), 1),
                                        AngleCos(Dyadic(0), 1), AngleCos(Dyadic(0), 1)};
    ChshResult r = chsh(settings, level);
    CHECK(r.s_measured == Dyadic(0));
    CHECK(r.s_law == Dyadic(0));
    CHECK(r.all_exact);
  }
  SUBCASE("aligned settings sit on the deterministic bound") {
    std::array<AngleCos, 4> settings = {AngleCos(Dyadic(1), 0), AngleCos(Dyadic(1), 0),
                                        AngleCos(Dyadic(1), 0), AngleCos(Dyadic(1), 0)};
    ChshResult r = chsh(settings, level);
    CHECK(r.s_measured == Dyadic(-2));
    CHECK(abs(r.s_measured) == Dyadic(2));
  }
  SUBCASE("independent runs carry no joint constraint") {
    // with one anti-aligned slot the four factual runs combine to 4; a single
    // counterfactually complete assignment could never produce this pattern
    std::array<AngleCos, 4> settings = {AngleCos(Dyadic(1), 0), AngleCos(Dyadic(-1), 0),
                                        AngleCos(Dyadic(1), 0), AngleCos(Dyadic(1), 0)};
    ChshResult r = chsh(settings, level);
    CHECK(abs(r.s_measured) == Dyadic(4));
  }
  SUBCASE("derived settings, exact at a fine enough grid") {
    const Dyadic c(181, 8);
    const Dyadic c3 = Dyadic(4) * c * c * c - Dyadic(3) * c;
    std::array<AngleCos, 4> settings = {AngleCos(c, 1), AngleCos(c3, 1), AngleCos(c, 1),
                                        AngleCos(c, 1)};
    ChshResult at12 = chsh(settings, 12, 0, Exactness::permissive);
    CHECK(at12.s_law == Dyadic(-11863283, 22));
    CHECK(!at12.all_exact);                         // the 3-theta flip needs scale 23
    CHECK(at12.s_measured == Dyadic(-181, 6));      // floor(4096 * f) = 3496
    CHECK(abs(at12.s_measured).to_rational() > BigRational(282, 100));
  }
}
