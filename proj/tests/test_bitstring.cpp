#include <doctest.h>

#include <bit>
#include <random>
#include <string>

#include "granular/bitstring.hpp"
#include "granular/errors.hpp"

using namespace granular;

namespace {

// independent oracle: build the Champernowne expansion by concatenating the
// binary digits of 1, 2, 3, ... into a character string
std::string naive_champernowne(std::size_t total) {
  std::string s;
  for (std::uint64_t v = 1; s.size() < total; ++v) {
    std::string digits;
    for (std::uint64_t x = v; x > 0; x >>= 1) digits.push_back(char('0' + (x & 1)));
    s.append(digits.rbegin(), digits.rend());
  }
  s.resize(total);
  return s;
}

BitString random_string(std::size_t n, std::mt19937_64& rng) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1);
  return BitString(std::move(b));
}

}  // namespace

TEST_CASE("champernowne worked segments") {
  CHECK(champernowne_bits(11, 0).to_text() == "11011100101");
  CHECK(champernowne_bits(4, 1).to_text() == "1011");
  CHECK(champernowne_bits(1, 0).to_text() == "1");
}

TEST_CASE("champernowne stream matches direct concatenation") {
  std::string oracle = naive_champernowne(4096);
  CHECK(champernowne_bits(4096, 0).to_text() == oracle);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    std::size_t offset = rng() % 3500;
    std::size_t length = 1 + rng() % 500;
    CHECK(champernowne_bits(length, offset).to_text() == oracle.substr(offset, length));
  }
}

TEST_CASE("champernowne prefix consistency") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 20; ++i) {
    std::size_t a = 1 + rng() % 2000;
    std::size_t b = 1 + rng() % 2000;
    std::string joined = champernowne_bits(a, 0).to_text() + champernowne_bits(b, a).to_text();
    CHECK(joined == champernowne_bits(a + b, 0).to_text());
  }
}

TEST_CASE("to_spin maps the bit convention") {
  BitString s = to_spin(Bits::from_text("110"));
  CHECK(s.entry(0) == 1);
  CHECK(s.entry(1) == 1);
  CHECK(s.entry(2) == -1);

  BitString zeros = to_spin(Bits(5));
  for (std::size_t i = 0; i < 5; ++i) CHECK(zeros.entry(i) == -1);

  BitString ch = to_spin(champernowne_bits(11, 0));
  int expected[] = {1, 1, -1, 1, 1, 1, -1, -1, 1, -1, 1};
  for (std::size_t i = 0; i < 11; ++i) CHECK(ch.entry(i) == expected[i]);
}

TEST_CASE("correlation basics") {
  std::mt19937_64 rng(4);
  BitString s = random_string(64, rng);
  CHECK(correlation(s, s) == Dyadic(1));
  CHECK(correlation(s, s.negated()) == Dyadic(-1));
  CHECK_THROWS_AS(correlation(s, random_string(32, rng)), LengthMismatch);
  CHECK_THROWS_AS(correlation(random_string(12, rng), random_string(12, rng)), LengthMismatch);
}

TEST_CASE("correlation against a naive sum") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = std::size_t(1) << (3 + rng() % 8);
    BitString s = random_string(n, rng);
    BitString t = random_string(n, rng);
    long long sum = 0;
    for (std::size_t k = 0; k < n; ++k) sum += s.entry(k) * t.entry(k);
    CHECK(correlation(s, t) == Dyadic(BigInt(sum), static_cast<unsigned>(std::countr_zero(n))));
  }
}

TEST_CASE("flip_fraction worked examples") {
  BitString ch = to_spin(champernowne_bits(11, 0));
  CHECK(flip_fraction(ch, Dyadic(1, 1)).bits().to_text() == "10001001111");
  CHECK(flip_fraction(ch, Dyadic(1)).bits().to_text() == "00100011010");
  CHECK(flip_fraction(ch, Dyadic(0)) == ch);
}

TEST_CASE("flip_fraction is an involution on its index set") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 1 + rng() % 500;
    BitString s = random_string(n, rng);
    Dyadic f(BigInt(rng() % 257), 8);  // in [0, 1]
    CHECK(flip_fraction(flip_fraction(s, f), f) == s);
  }
}

TEST_CASE("flip count and the exact correlation law") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    unsigned log2n = 4 + rng() % 8;
    std::size_t n = std::size_t(1) << log2n;
    unsigned scale = rng() % (log2n + 1);
    Dyadic f(BigInt(rng() % (std::uint64_t(1) << scale) + 1), scale);
    if (f > Dyadic(1)) f = Dyadic(1);
    // n * f is an integer here, so exactly n*f entries are negated and the
    // correlation with the original is exactly 1 - 2f
    BitString s = random_string(n, rng);
    BitString flipped = flip_fraction(s, f);
    CHECK(flip_count(n, f) == (BigInt(n) * f.numerator() >> f.scale()).convert_to<std::uint64_t>());
    CHECK(correlation(s, flipped) == Dyadic(1) - Dyadic(2) * f);
  }
}

TEST_CASE("correlation tracks the flipped count even when L*f is fractional") {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 30; ++i) {
    unsigned log2n = 3 + rng() % 6;
    std::size_t n = std::size_t(1) << log2n;
    Dyadic f(BigInt(rng() % 1025), 10);  // scale finer than the length
    BitString s = random_string(n, rng);
    std::uint64_t flips = flip_count(n, f);
    Dyadic expected = Dyadic(1) - Dyadic(BigInt(2 * flips), log2n);
    CHECK(correlation(s, flip_fraction(s, f)) == expected);
  }
}

TEST_CASE("flip positions follow the ceiling rule") {
  // f = 3/8: positions ceil(8j/3) = 3, 6, 8, 11, ...
  BitString s = BitString::ones(12);
  BitString flipped = flip_fraction(s, Dyadic(3, 3));
  std::vector<int> expect(12, 1);
  for (int pos : {3, 6, 8, 11}) expect[pos - 1] = -1;
  for (std::size_t i = 0; i < 12; ++i) CHECK(flipped.entry(i) == expect[i]);
}

TEST_CASE("balance") {
  Bits two(2);
  two.set(0, true);
  CHECK(balance(BitString(two)) == BigRational(0));
  CHECK(balance(BitString::ones(9)) == BigRational(1));

  BitString ch = to_spin(champernowne_bits(std::size_t(1) << 16, 0));
  BigRational b = balance(ch);
  long long sum = 0;
  for (std::size_t i = 0; i < ch.size(); ++i) sum += ch.entry(i);
  CHECK(b == BigRational(sum, ch.size()));
  BigRational mag = b < 0 ? BigRational(-b) : b;
  CHECK(mag <= BigRational(1, 20));
}

TEST_CASE("bit text and hex round trips") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 1 + rng() % 200;
    Bits b(n);
    for (std::size_t k = 0; k < n; ++k) b.set(k, rng() & 1);
    CHECK(Bits::from_text(b.to_text()) == b);
    CHECK(Bits::from_hex(n, b.to_hex()) == b);
  }
  CHECK_THROWS_AS(Bits::from_text("10x"), ParseError);
  CHECK_THROWS_AS(Bits::from_hex(4, "zz"), ParseError);
  CHECK_THROWS_AS(Bits::from_hex(4, "ff"), ParseError);  // bits beyond length
}
