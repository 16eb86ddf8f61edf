#include "granular/qubits.hpp"

#include <bit>

#include "granular/errors.hpp"

namespace granular {

namespace {

unsigned level_of_length(std::size_t n, const char* what) {
  if (n < 2 || (n & (n - 1)) != 0) {
    throw LengthMismatch(std::string(what) + ": length must be a power of two >= 2");
  }
  return static_cast<unsigned>(std::countr_zero(n));
}

// Sigma^t on 2^level entries equals E^(t / 2^(level-1)).
std::uint64_t phase_steps(unsigned level, const Dyadic& alpha) {
  if (alpha.scale() + 1 > level) {
    throw ScaleTooFine("phase exponent scale " + std::to_string(alpha.scale()) +
                       " too fine for level " + std::to_string(level));
  }
  const std::uint64_t group = std::uint64_t(1) << (level + 1);
  BigInt steps = alpha.numerator() * pow2(level - 1 - alpha.scale());
  steps %= group;
  if (steps < 0) steps += group;
  return steps.convert_to<std::uint64_t>();
}

struct Selector {
  std::uint64_t plus_rows;  // entries [0, plus_rows) read the E_a image
  bool rounded;
};

Selector selector_rows(unsigned level, const Dyadic& c_abs, Exactness mode) {
  const std::uint64_t size = std::uint64_t(1) << level;
  if (c_abs.scale() <= level) {
    BigInt rows = c_abs.numerator() * pow2(level - c_abs.scale());
    return {rows.convert_to<std::uint64_t>(), false};
  }
  if (mode == Exactness::strict) {
    throw ScaleTooFine("cosine scale " + std::to_string(c_abs.scale()) +
                       " too fine for level " + std::to_string(level));
  }
  // round cos * 2^level to the nearest integer, ties to even
  unsigned shift = c_abs.scale() - level;
  BigInt scaled = c_abs.numerator();
  BigInt whole = scaled >> shift;
  BigInt rem = scaled - (whole << shift);
  BigInt half = BigInt(1) << (shift - 1);
  if (rem > half || (rem == half && whole % 2 != 0)) ++whole;
  std::uint64_t rows = whole.convert_to<std::uint64_t>();
  if (rows > size) rows = size;
  return {rows, true};
}

BitString blend_leading(const BitString& a_img, const BitString& b_img, std::uint64_t plus_rows) {
  Bits out(a_img.size());
  for (std::size_t n = 0; n < a_img.size(); ++n) {
    const BitString& src = n < plus_rows ? a_img : b_img;
    out.set(n, src.entry(n) > 0);
  }
  return BitString(std::move(out));
}

}  // namespace

BitString ket_up(unsigned level) { return BitString::ones(std::size_t(1) << level); }

BitString ket_down(unsigned level) { return BitString::minus_ones(std::size_t(1) << level); }

SignedPermutation qubit_phase(unsigned level, const Dyadic& alpha) {
  if (level == 0) throw IndexOutOfRange("qubit level must be >= 1");
  return signed_shift_power(std::size_t(1) << level, phase_steps(level, alpha));
}

int leading_bit_spin(const BitString& s, const Dyadic& alpha) {
  unsigned level = level_of_length(s.size(), "leading_bit_spin");
  const std::uint64_t size = s.size();
  std::uint64_t t = phase_steps(level, alpha);
  std::uint64_t step = t % size;
  bool flip = (t / size) & 1;
  int value = step == 0 ? s.entry(0) : -s.entry(size - step);
  return flip ? -value : value;
}

Superposition superpose(const OperatorLabel& a, const OperatorLabel& b, const AngleCos& theta,
                        const BitString& base, Exactness mode) {
  if (a.level != b.level) throw SizeMismatch("superpose: operator levels differ");
  const unsigned level = a.level;
  if (base.size() != (std::size_t(1) << level)) {
    throw SizeMismatch("superpose: base length does not match the operator level");
  }
  BitString a_img = build_operator(a).apply(base);
  BitString b_img = build_operator(b).apply(base);
  if (theta.cos().sign() < 0) a_img = a_img.negated();
  if (theta.sin_sign() < 0) b_img = b_img.negated();
  Selector sel = selector_rows(level, abs(theta.cos()), mode);
  return {blend_leading(a_img, b_img, sel.plus_rows), sel.rounded};
}

Superposition superpose_by_sine(const OperatorLabel& a, const OperatorLabel& b,
                                const Dyadic& sin_value, int cos_sign, const BitString& base,
                                Exactness mode) {
  Dyadic s_abs = abs(sin_value);
  bool extremal = s_abs == Dyadic(1);
  AngleCos swapped(sin_value, extremal ? 0 : cos_sign);
  // sin theta takes over the selector role; cos theta's sign rides on E_a,
  // which sits in the swapped E_b slot.
  return superpose(b, a, swapped, base, mode);
}

SuperposeCorrelation superpose_correlation(const OperatorLabel& a, const OperatorLabel& b,
                                           const AngleCos& theta, Exactness mode) {
  const BitString base = BitString::ones(std::size_t(1) << a.level);
  Superposition s = superpose(a, b, theta, base, mode);
  BitString a_img = build_operator(a).apply(base);
  Dyadic measured = correlation(s.value, a_img);
  return {measured, theta.cos(), measured == theta.cos()};
}

std::optional<Dyadic> same_class(const BitString& s, const BitString& t) {
  if (s.size() != t.size()) throw LengthMismatch("same_class: lengths differ");
  unsigned level = level_of_length(s.size(), "same_class");
  const std::uint64_t group = std::uint64_t(1) << (level + 1);
  for (std::uint64_t step = 0; step < group; ++step) {
    if (signed_shift_power(s.size(), step).apply(s) == t) {
      // Sigma^step = E^(step / 2^(level-1))
      return Dyadic(BigInt(step), level - 1);
    }
  }
  return std::nullopt;
}

std::vector<ClassScanEntry> class_scan(const QuaternionTriple& triple,
                                       const std::vector<AngleCos>& grid, const BitString& base,
                                       Exactness mode) {
  const BitString reference = build_operator(triple.a).apply(base);
  std::vector<ClassScanEntry> out;
  out.reserve(grid.size());
  for (const AngleCos& theta : grid) {
    Superposition s = superpose(triple.a, triple.b, theta, base, mode);
    out.push_back({theta, same_class(reference, s.value)});
  }
  return out;
}

EntangledPair entangle_pair(const OperatorLabel& a, const OperatorLabel& d, const AngleCos& theta,
                            Exactness mode) {
  const BitString base = BitString::ones(std::size_t(1) << a.level);
  BitString s1 = build_operator(a).apply(base);
  Superposition s2 = superpose(a, d, theta, base, mode);
  return {std::move(s1), std::move(s2.value), s2.rounded};
}

GranularQubit phase_shift(const GranularQubit& q, const Dyadic& alpha) {
  return {q.level, q.triple, qubit_phase(q.level, alpha).apply(q.representative)};
}

GranularRegister::GranularRegister(unsigned level, std::vector<BitString> strings)
    : level_(level), strings_(std::move(strings)) {
  if (level_ == 0 || level_ > 31) throw ShapeMismatch("register level out of range");
  if (strings_.size() != level_) {
    throw ShapeMismatch("register needs exactly `level` strings");
  }
  for (const BitString& s : strings_) {
    if (s.size() != (std::size_t(1) << level_)) {
      throw ShapeMismatch("register strings must have length 2^level");
    }
  }
}

std::vector<std::uint32_t> encode_register(const GranularRegister& reg) {
  const std::size_t digits = std::size_t(1) << reg.level();
  std::vector<std::uint32_t> out(digits, 0);
  for (unsigned i = 0; i < reg.level(); ++i) {
    const BitString& s = reg.strings()[i];
    for (std::size_t n = 0; n < digits; ++n) {
      if (s.entry(n) > 0) out[n] |= std::uint32_t(1) << i;
    }
  }
  return out;
}

GranularRegister decode_register(unsigned level, const std::vector<std::uint32_t>& digits) {
  if (level == 0 || level > 31) throw ShapeMismatch("register level out of range");
  const std::size_t expected = std::size_t(1) << level;
  if (digits.size() != expected) throw ShapeMismatch("digit string must have length 2^level");
  std::vector<BitString> strings;
  strings.reserve(level);
  for (unsigned i = 0; i < level; ++i) {
    Bits b(expected);
    for (std::size_t n = 0; n < expected; ++n) {
      if (digits[n] >> level) throw ShapeMismatch("digit exceeds base 2^level");
      b.set(n, (digits[n] >> i) & 1u);
    }
    strings.emplace_back(std::move(b));
  }
  return GranularRegister(level, std::move(strings));
}

std::vector<std::vector<Dyadic>> register_correlations(const GranularRegister& reg) {
  const auto& strings = reg.strings();
  std::vector<std::vector<Dyadic>> table(strings.size());
  for (std::size_t i = 0; i < strings.size(); ++i) {
    table[i].reserve(strings.size());
    for (std::size_t j = 0; j < strings.size(); ++j) {
      table[i].push_back(correlation(strings[i], strings[j]));
    }
  }
  return table;
}

std::vector<std::pair<Dyadic, Dyadic>> autocorrelation_profile(const BitString& s) {
  unsigned level = level_of_length(s.size(), "autocorrelation_profile");
  const std::uint64_t group = std::uint64_t(1) << (level + 1);
  std::vector<std::pair<Dyadic, Dyadic>> out;
  out.reserve(group);
  for (std::uint64_t step = 0; step < group; ++step) {
    BitString shifted = signed_shift_power(s.size(), step).apply(s);
    out.emplace_back(Dyadic(BigInt(step), level - 1), correlation(shifted, s));
  }
  return out;
}

std::vector<DistributivityRecord> distributivity_report(const QuaternionTriple& triple) {
  const unsigned level = triple.a.level;
  const std::size_t size = std::size_t(1) << level;
  const BitString base = BitString::ones(size);
  const BitString a_img = build_operator(triple.a).apply(base);
  const BitString b_img = build_operator(triple.b).apply(base);
  const std::uint64_t group = std::uint64_t(1) << (level + 1);

  std::vector<DistributivityRecord> out;
  for (std::uint64_t t = 0; t < group; ++t) {
    Dyadic alpha(BigInt(t), level - 1);
    SignedPermutation phase = signed_shift_power(size, t);
    BitString pa = phase.apply(a_img);  // E_a then phase
    BitString pb = phase.apply(b_img);
    BitString ap = build_operator(triple.a).apply(phase.apply(base));  // phase then E_a
    BitString bp = build_operator(triple.b).apply(phase.apply(base));
    for (std::uint64_t rows = 0; rows <= size; ++rows) {
      Dyadic c(BigInt(rows), level);
      AngleCos theta(c, c == Dyadic(1) ? 0 : 1);
      BitString lhs = phase.apply(blend_leading(a_img, b_img, rows));
      BitString same_post = blend_leading(pa, pb, rows);

      // selector conjugated by the shift: entry n reads A when the shift's
      // source row sat in the leading block
      Bits conj(size);
      for (std::size_t n = 0; n < size; ++n) {
        const BitString& src = phase.source(n) < rows ? pa : pb;
        conj.set(n, src.entry(n) > 0);
      }
      BitString conj_post = BitString(std::move(conj));

      BitString same_pre = blend_leading(ap, bp, rows);

      out.push_back({alpha, theta, same_post == lhs, conj_post == lhs, same_pre == lhs});
    }
  }
  return out;
}

}  // namespace granular
