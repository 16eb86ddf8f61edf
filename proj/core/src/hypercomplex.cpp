#include "granular/hypercomplex.hpp"

#include <random>

#include "granular/errors.hpp"

namespace granular {

namespace {

void check_level(unsigned level, unsigned max_level = 31) {
  if (level == 0 || level > max_level) {
    throw IndexOutOfRange("level out of range: " + std::to_string(level));
  }
}

}  // namespace

SignedPermutation build_root(const OperatorLabel& label) {
  check_level(label.level);
  const std::size_t size = std::size_t(1) << label.level;
  const std::uint32_t j = label.index;
  if (j < 1 || j >= size) {
    throw IndexOutOfRange("root index out of range: " + std::to_string(j));
  }
  const std::size_t half = size / 2;
  std::vector<std::uint32_t> src(size);
  std::vector<std::uint8_t> neg(size);
  if (j == 1) {
    // E: (X, Y) -> (-Y, X)
    for (std::size_t n = 0; n < half; ++n) {
      src[n] = static_cast<std::uint32_t>(n + half);
      neg[n] = 1;
      src[half + n] = static_cast<std::uint32_t>(n);
      neg[half + n] = 0;
    }
    return make_unchecked(std::move(src), std::move(neg));
  }
  if (j <= half) {
    // antidiagonal block form over the previous level's root e = E_(j-1):
    // (X, Y) -> (e(Y), e(X))
    SignedPermutation e = build_root({label.level - 1, j - 1});
    for (std::size_t n = 0; n < half; ++n) {
      src[n] = static_cast<std::uint32_t>(half + e.source(n));
      neg[n] = e.sign(n) < 0;
      src[half + n] = e.source(n);
      neg[half + n] = e.sign(n) < 0;
    }
    return make_unchecked(std::move(src), std::move(neg));
  }
  // diagonal block form: (X, Y) -> (e(X), -e(Y)) with e = E_(j - 2^(level-1))
  SignedPermutation e = build_root({label.level - 1, j - static_cast<std::uint32_t>(half)});
  for (std::size_t n = 0; n < half; ++n) {
    src[n] = e.source(n);
    neg[n] = e.sign(n) < 0;
    src[half + n] = static_cast<std::uint32_t>(half + e.source(n));
    neg[half + n] = e.sign(n) > 0;
  }
  return make_unchecked(std::move(src), std::move(neg));
}

SignedPermutation build_operator(const OperatorLabel& label) {
  if (label.index == 0) {
    check_level(label.level);
    return SignedPermutation::identity(std::size_t(1) << label.level);
  }
  return build_root(label);
}

QuaternionTriple quaternion_triple(const OperatorLabel& label) {
  check_level(label.level);
  const std::uint32_t count = (std::uint32_t(1) << label.level) - 1;
  const std::uint32_t j = label.index;
  if (j < 2 || j > count) {
    throw IndexOutOfRange("quaternion partner requires index in [2, 2^level - 1]");
  }
  const std::uint32_t half = std::uint32_t(1) << (label.level - 1);
  OperatorLabel e{label.level, 1};
  if (j <= half) {
    return QuaternionTriple{e, label, {label.level, j + half - 1}};
  }
  return QuaternionTriple{e, {label.level, j - half + 1}, label};
}

SignedPermutation signed_shift_power(std::size_t length, std::uint64_t exponent) {
  if (length == 0 || (length & (length - 1)) != 0) {
    throw InvalidParametrization("shift length must be a power of two");
  }
  const std::uint64_t t = exponent % (2 * length);
  const std::uint64_t s = t % length;
  const bool global_flip = (t / length) & 1;  // Sigma^L = -Id
  std::vector<std::uint32_t> src(length);
  std::vector<std::uint8_t> neg(length);
  for (std::size_t n = 0; n < length; ++n) {
    bool wrapped = n < s;
    src[n] = static_cast<std::uint32_t>(wrapped ? length + n - s : n - s);
    neg[n] = static_cast<std::uint8_t>(wrapped ^ global_flip);
  }
  return make_unchecked(std::move(src), std::move(neg));
}

SignedPermutation root_of_e(unsigned level, unsigned r) {
  check_level(level, 30);
  if (r > level) throw IndexOutOfRange("root exponent r must satisfy 0 <= r <= level");
  const std::size_t length = std::size_t(1) << (level + 1);
  return signed_shift_power(length, std::uint64_t(1) << (level - r));
}

SignedPermutation phase_power(unsigned level, const Dyadic& alpha) {
  check_level(level, 30);
  if (alpha.scale() > level) {
    throw ScaleTooFine("phase exponent scale " + std::to_string(alpha.scale()) +
                       " exceeds level " + std::to_string(level));
  }
  const std::uint64_t order = phase_order(level);
  BigInt steps = alpha.numerator() * pow2(level - alpha.scale());
  steps %= order;
  if (steps < 0) steps += order;
  return signed_shift_power(std::size_t(1) << (level + 1), steps.convert_to<std::uint64_t>());
}

std::uint64_t phase_order(unsigned level) { return std::uint64_t(1) << (level + 2); }

bool OrthogonalityTable::is_identity_pattern() const {
  for (std::size_t j = 0; j < corr.size(); ++j) {
    for (std::size_t k = 0; k < corr[j].size(); ++k) {
      if (corr[j][k] != (j == k ? Dyadic(1) : Dyadic(0))) return false;
    }
  }
  return true;
}

OrthogonalityTable orthogonality_table(unsigned level, unsigned level_limit) {
  check_level(level);
  if (level > level_limit) {
    throw LimitExceeded("orthogonality table level " + std::to_string(level) +
                        " exceeds limit " + std::to_string(level_limit));
  }
  const std::size_t count = std::size_t(1) << level;
  const BitString ones = BitString::ones(count);
  std::vector<BitString> strings;
  strings.reserve(count);
  for (std::uint32_t j = 0; j < count; ++j) {
    strings.push_back(build_operator({level, j}).apply(ones));
  }
  OrthogonalityTable table{level, {}};
  table.corr.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    table.corr[j].reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      table.corr[j].push_back(correlation(strings[j], strings[k]));
    }
  }
  return table;
}

namespace {

BitString random_pm_string(std::size_t n, std::mt19937_64& rng) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1);
  return BitString(std::move(b));
}

}  // namespace

std::vector<CheckResult> verify_algebra(unsigned level, unsigned level_limit) {
  check_level(level);
  if (level > level_limit) {
    throw LimitExceeded("algebra verification level exceeds limit");
  }
  std::vector<CheckResult> results;
  const std::size_t size = std::size_t(1) << level;
  const std::uint32_t count = static_cast<std::uint32_t>(size) - 1;
  const SignedPermutation id = SignedPermutation::identity(size);

  {
    bool ok = true;
    for (std::uint32_t j = 1; j <= count && ok; ++j) {
      SignedPermutation e = build_root({level, j});
      ok = (e * e).is_negated_identity();
    }
    results.push_back({"roots square to -Id", ok,
                       std::to_string(count) + " operators"});
  }

  if (level >= 2) {
    bool ok = true;
    std::uint32_t checked = 0;
    for (std::uint32_t j = 2; j <= (std::uint32_t(1) << (level - 1)) && ok; ++j) {
      QuaternionTriple t = quaternion_triple({level, j});
      SignedPermutation E = build_root(t.e);
      SignedPermutation A = build_root(t.a);
      SignedPermutation B = build_root(t.b);
      // full unit table, composition in application order (left factor first)
      ok = (E * A == B) && (A * B == E) && (B * E == A) && (A * E == B.negated()) &&
           (B * A == E.negated()) && (E * B == A.negated()) &&
           (E * A * B).is_negated_identity();
      ++checked;
    }
    results.push_back({"quaternion triples satisfy the unit table", ok,
                       std::to_string(checked) + " triples"});
  }

  {
    // streamed rather than via orthogonality_table: the materialized table
    // at level 12 would hold 2^24 rationals
    const BitString ones = BitString::ones(size);
    std::vector<BitString> strings;
    strings.reserve(size);
    for (std::uint32_t j = 0; j < size; ++j) {
      strings.push_back(build_operator({level, static_cast<std::uint32_t>(j)}).apply(ones));
    }
    bool ok = true;
    for (std::size_t j = 0; j < size && ok; ++j) {
      for (std::size_t k = 0; k < size && ok; ++k) {
        ok = correlation(strings[j], strings[k]) == (j == k ? Dyadic(1) : Dyadic(0));
      }
    }
    results.push_back({"basis strings pairwise orthogonal", ok,
                       std::to_string(size) + "x" + std::to_string(size) + " pairs"});
  }

  {
    SignedPermutation g = root_of_e(level, level);
    bool ok = g.pow(phase_order(level)).is_identity() &&
              g.pow(phase_order(level) / 2).is_negated_identity();
    for (unsigned r = 0; r <= level && ok; ++r) {
      ok = root_of_e(level, r).pow(std::uint64_t(1) << r) == root_of_e(level, 0);
    }
    results.push_back({"root tower and phase group order", ok,
                       "generator order " + std::to_string(phase_order(level))});
  }

  {
    std::mt19937_64 rng(0x5eed);
    bool ok = true;
    for (int trial = 0; trial < 16 && ok; ++trial) {
      std::uint32_t j = 1 + static_cast<std::uint32_t>(rng() % count);
      std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % count);
      SignedPermutation p = build_root({level, j});
      SignedPermutation q = build_root({level, k});
      BitString s = random_pm_string(size, rng);
      ok = q.apply(p.apply(s)) == (p * q).apply(s);
    }
    results.push_back({"composition matches chained application", ok, "16 random cases"});
  }

  if (level >= 2) {
    // self-similarity: E_(1+j) maps (X, Y) to (e_j(Y), e_j(X)), and the
    // diagonal partner maps it to (e_j(X), -e_j(Y))
    std::mt19937_64 rng(0xfeed);
    bool ok = true;
    const std::size_t half = size / 2;
    for (std::uint32_t j = 1; j < (std::uint32_t(1) << (level - 1)) && ok; ++j) {
      SignedPermutation low = build_root({level - 1, j});
      SignedPermutation anti = build_root({level, j + 1});
      SignedPermutation diag = build_root({level, j + (std::uint32_t(1) << (level - 1))});
      BitString x = random_pm_string(half, rng);
      BitString y = random_pm_string(half, rng);
      Bits joined(size);
      for (std::size_t i = 0; i < half; ++i) {
        joined.set(i, x.entry(i) > 0);
        joined.set(half + i, y.entry(i) > 0);
      }
      BitString s(joined);
      BitString ex = low.apply(x);
      BitString ey = low.apply(y);
      BitString anti_applied = anti.apply(s);
      BitString diag_applied = diag.apply(s);
      for (std::size_t i = 0; i < half && ok; ++i) {
        ok = anti_applied.entry(i) == ey.entry(i) &&
             anti_applied.entry(half + i) == ex.entry(i) &&
             diag_applied.entry(i) == ex.entry(i) &&
             diag_applied.entry(half + i) == -ey.entry(i);
      }
    }
    results.push_back({"previous level embeds by self-similarity", ok,
                       "block actions against level " + std::to_string(level - 1)});
  }

  return results;
}

}  // namespace granular
