#include <doctest.h>

#include <cmath>
#include <random>

#include "granular/angle.hpp"
#include "granular/dyadic.hpp"
#include "granular/errors.hpp"

using namespace granular;

namespace {

Dyadic random_dyadic(std::mt19937_64& rng) {
  std::int64_t num = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
  unsigned scale = static_cast<unsigned>(rng() % 24);
  return Dyadic(BigInt(num), scale);
}

}  // namespace

TEST_CASE("dyadic canonical form") {
  CHECK(Dyadic(6, 1).numerator() == 3);
  CHECK(Dyadic(6, 1).scale() == 0);
  CHECK(Dyadic(4, 3) == Dyadic(1, 1));
  CHECK(Dyadic(0, 17) == Dyadic(0));
  CHECK(Dyadic(0, 17).scale() == 0);
  CHECK(Dyadic(-8, 2) == Dyadic(-2));
}

TEST_CASE("dyadic arithmetic worked examples") {
  CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));   // 1/2 + 1/4 = 3/4
  CHECK(Dyadic(3, 2) * Dyadic(3, 2) == Dyadic(9, 4));   // 3/4 * 3/4 = 9/16
  Dyadic x(37, 5);
  Dyadic zero = x + (-x);
  CHECK(zero == Dyadic(0));
  CHECK(zero.scale() == 0);
}

TEST_CASE("dyadic field identities on random values") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    Dyadic a = random_dyadic(rng);
    Dyadic b = random_dyadic(rng);
    Dyadic c = random_dyadic(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Dyadic(0) == a);
    CHECK(a * Dyadic(1) == a);
    // results stay canonical
    Dyadic s = a + b;
    CHECK((s.scale() == 0 || s.numerator() % 2 != 0));
  }
}

TEST_CASE("dyadic comparison is exact") {
  CHECK(Dyadic(1, 1) < Dyadic(3, 2));
  CHECK(Dyadic(-1, 1) > Dyadic(-3, 2));
  CHECK(Dyadic(1, 20) > Dyadic(0));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Dyadic a = random_dyadic(rng);
    Dyadic b = random_dyadic(rng);
    bool lt = a < b;
    CHECK(lt == (a.to_rational() < b.to_rational()));
  }
}

TEST_CASE("dyadic text forms") {
  CHECK(Dyadic::parse("3/4") == Dyadic(3, 2));
  CHECK(Dyadic::parse("3/2^2") == Dyadic(3, 2));
  CHECK(Dyadic::parse("-5/8") == Dyadic(-5, 3));
  CHECK(Dyadic::parse("7") == Dyadic(7));
  CHECK(Dyadic::parse(" 181/256 ") == Dyadic(181, 8));
  CHECK(Dyadic(3, 2).str() == "3/4");
  CHECK(Dyadic(-7).str() == "-7");
  CHECK_THROWS_AS(Dyadic::parse("1/3"), ParseError);
  CHECK_THROWS_AS(Dyadic::parse("x"), ParseError);
  // round trip
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Dyadic d = random_dyadic(rng);
    CHECK(Dyadic::parse(d.str()) == d);
  }
}

TEST_CASE("rational conversion recognises dyadics") {
  CHECK(Dyadic::from_rational(BigRational(3, 8)) == Dyadic(3, 3));
  CHECK(!Dyadic::from_rational(BigRational(1, 3)).has_value());
  CHECK(is_dyadic(BigRational(5, 16)));
  CHECK(!is_dyadic(BigRational(4, 5)));
}

TEST_CASE("anglepi reduction and arithmetic") {
  CHECK(AnglePi(5, 1) == AnglePi(1, 1));     // 5/2 pi = pi/2 mod 2 pi
  CHECK(AnglePi(-1, 1) == AnglePi(3, 1));    // -pi/2 = 3 pi/2
  CHECK(AnglePi(4, 1) == AnglePi::zero());   // 2 pi = 0
  CHECK(AnglePi(2, 1) == AnglePi::half());   // canonicalization
  CHECK(AnglePi::quarter() + AnglePi::quarter() == AnglePi::half());
  CHECK(AnglePi::quarter() - AnglePi::half() == AnglePi::three_quarter());
  CHECK(AnglePi::half().antipode() == AnglePi::zero());
  CHECK(AnglePi::parse("3/2 pi") == AnglePi::three_quarter());
  CHECK(AnglePi::parse("1/2^1 pi") == AnglePi::quarter());
  CHECK(AnglePi(3, 1).str() == "3/2 pi");
}

TEST_CASE("cos_exact classifies the four shared angles") {
  CHECK(cos_exact(AnglePi::zero()) == Dyadic(1));
  CHECK(cos_exact(AnglePi::quarter()) == Dyadic(0));
  CHECK(cos_exact(AnglePi::half()) == Dyadic(-1));
  CHECK(cos_exact(AnglePi::three_quarter()) == Dyadic(0));
  CHECK(!cos_exact(AnglePi(1, 2)).has_value());  // pi/4
  CHECK(!cos_exact(AnglePi(3, 3)).has_value());
  CHECK(!cos_exact(AnglePi(1023, 10)).has_value());
}

TEST_CASE("angle_to_pi succeeds only on the four points") {
  CHECK(angle_to_pi(AngleCos(Dyadic(1), 0)) == AnglePi::zero());
  CHECK(angle_to_pi(AngleCos(Dyadic(0), 1)) == AnglePi::quarter());
  CHECK(angle_to_pi(AngleCos(Dyadic(0), -1)) == AnglePi::three_quarter());
  CHECK(angle_to_pi(AngleCos(Dyadic(-1), 0)) == AnglePi::half());
  CHECK(!angle_to_pi(AngleCos(Dyadic(3, 2), 1)).has_value());  // cos = 3/4
  CHECK(!angle_to_pi(AngleCos(Dyadic(1, 1), -1)).has_value());
}

TEST_CASE("four point conversions invert each other") {
  for (const AnglePi& a : {AnglePi::zero(), AnglePi::quarter(), AnglePi::half(),
                           AnglePi::three_quarter()}) {
    auto round = angle_to_pi(four_point_to_cos(a));
    REQUIRE(round.has_value());
    CHECK(*round == a);
  }
}

TEST_CASE("anglecos validation and text") {
  CHECK_THROWS_AS(AngleCos(Dyadic(3, 1), 1), InvalidParametrization);   // 3/2 > 1
  CHECK_THROWS_AS(AngleCos(Dyadic(1), 1), InvalidParametrization);      // sin must be 0
  CHECK_THROWS_AS(AngleCos(Dyadic(1, 1), 0), InvalidParametrization);   // sin must not be 0
  CHECK(AngleCos::parse("3/4") == AngleCos(Dyadic(3, 2), 1));
  CHECK(AngleCos::parse("cos=3/4,sin=-") == AngleCos(Dyadic(3, 2), -1));
  CHECK(AngleCos::parse("1") == AngleCos(Dyadic(1), 0));
  CHECK(AngleCos(Dyadic(3, 2), -1).str() == "cos=3/4,sin=-");
}

TEST_CASE("shift_by_four_point tracks exact relative orientations") {
  AngleCos theta(Dyadic(3, 2), 1);
  CHECK(shift_by_four_point(theta, AnglePi::zero()) == theta);
  CHECK(shift_by_four_point(theta, AnglePi::half()) == AngleCos(Dyadic(-3, 2), -1));
  CHECK(!shift_by_four_point(theta, AnglePi::quarter()).has_value());
  CHECK(!shift_by_four_point(theta, AnglePi(1, 3)).has_value());
  // where the sine is exact the quarter shift stays representable
  CHECK(shift_by_four_point(AngleCos(Dyadic(1), 0), AnglePi::quarter()) ==
        AngleCos(Dyadic(0), 1));
  CHECK(shift_by_four_point(AngleCos(Dyadic(0), 1), AnglePi::quarter()) ==
        AngleCos(Dyadic(-1), 0));
}

TEST_CASE("pythagorean parametrization") {
  PythPair p = pyth_pair(2, 1);
  CHECK(p.cos == BigRational(4, 5));
  CHECK(p.sin == BigRational(3, 5));
  PythPair q = pyth_pair(3, 2);
  CHECK(q.cos == BigRational(12, 13));
  CHECK(q.sin == BigRational(5, 13));

  CHECK_THROWS_AS(pyth_pair(1, 2), InvalidParametrization);  // u <= v
  CHECK_THROWS_AS(pyth_pair(4, 2), InvalidParametrization);  // common factor
  CHECK_THROWS_AS(pyth_pair(3, 1), InvalidParametrization);  // same parity

  std::mt19937_64 rng(5);
  int built = 0;
  while (built < 50) {
    BigInt u = 2 + static_cast<std::int64_t>(rng() % 200);
    BigInt v = 1 + static_cast<std::int64_t>(rng() % 100);
    if (!(u > v) || boost::multiprecision::gcd(u, v) != 1 || (u + v) % 2 == 0) continue;
    PythPair pair = pyth_pair(u, v);
    CHECK(pair.cos * pair.cos + pair.sin * pair.sin == BigRational(1));
    CHECK(!is_dyadic(pair.cos));
    CHECK(!is_dyadic(pair.sin));
    ++built;
  }
}

TEST_CASE("triple angle identity") {
  CHECK(triple_angle(AngleCos(Dyadic(1, 1), 1)) == AngleCos(Dyadic(-1), 0));  // 3 * (pi/3) = pi
  CHECK(triple_angle(AngleCos(Dyadic(1), 0)) == AngleCos(Dyadic(1), 0));
  AngleCos t = triple_angle(AngleCos(Dyadic(181, 8), 1));
  CHECK(t.cos() == Dyadic(-2966771, 22));
  CHECK(t.sin_sign() == 1);
  // numeric cross-check over a sweep of first-quadrant cosines
  for (int num = 1; num < 16; ++num) {
    AngleCos theta(Dyadic(num, 4), 1);
    double angle = std::acos(theta.cos().to_double());
    AngleCos three = triple_angle(theta);
    CHECK(std::abs(three.cos().to_double() - std::cos(3 * angle)) < 1e-12);
    double s = std::sin(3 * angle);
    if (std::abs(s) > 1e-9) CHECK(three.sin_sign() == (s > 0 ? 1 : -1));
  }
}

TEST_CASE("numeric spot check of the four exact cosines") {
  for (const AnglePi& a : {AnglePi::zero(), AnglePi::quarter(), AnglePi::half(),
                           AnglePi::three_quarter()}) {
    double angle = a.turns_of_pi().to_double() * 3.14159265358979323846;
    auto v = cos_exact(a);
    REQUIRE(v.has_value());
    CHECK(std::abs(v->to_double() - std::cos(angle)) < 1e-12);
  }
}
