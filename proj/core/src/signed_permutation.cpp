#include "granular/signed_permutation.hpp"

#include <numeric>

#include "granular/errors.hpp"

namespace granular {

SignedPermutation::SignedPermutation(std::vector<std::uint32_t> source,
                                     std::vector<std::uint8_t> negate)
    : source_(std::move(source)), negate_(std::move(negate)) {
  if (source_.size() != negate_.size()) {
    throw SizeMismatch("signed permutation: source/sign lengths differ");
  }
  std::vector<bool> seen(source_.size(), false);
  for (std::uint32_t s : source_) {
    if (s >= source_.size() || seen[s]) {
      throw InvalidParametrization("signed permutation: source map is not a bijection");
    }
    seen[s] = true;
  }
}

SignedPermutation make_unchecked(std::vector<std::uint32_t> source,
                                 std::vector<std::uint8_t> negate) {
  return SignedPermutation(SignedPermutation::Unchecked{}, std::move(source), std::move(negate));
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<std::uint32_t> src(n);
  std::iota(src.begin(), src.end(), 0);
  return make_unchecked(std::move(src), std::vector<std::uint8_t>(n, 0));
}

BitString SignedPermutation::apply(const BitString& s) const {
  if (s.size() != size()) throw SizeMismatch("apply: operator and string sizes differ");
  Bits out(size());
  for (std::size_t n = 0; n < size(); ++n) {
    bool bit = s.bits().get(source_[n]);
    out.set(n, negate_[n] ? !bit : bit);
  }
  return BitString(std::move(out));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw SizeMismatch("compose: operator sizes differ");
  std::size_t n = a.size();
  std::vector<std::uint32_t> src(n);
  std::vector<std::uint8_t> neg(n);
  // (x.a).b: entry n of the result reads through b first, then a.
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t mid = b.source_[i];
    src[i] = a.source_[mid];
    neg[i] = b.negate_[i] ^ a.negate_[mid];
  }
  return make_unchecked(std::move(src), std::move(neg));
}

SignedPermutation SignedPermutation::pow(std::uint64_t k) const {
  SignedPermutation result = identity(size());
  SignedPermutation base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

SignedPermutation SignedPermutation::negated() const {
  auto neg = negate_;
  for (auto& x : neg) x ^= 1;
  return make_unchecked(source_, std::move(neg));
}

bool SignedPermutation::is_identity() const {
  for (std::size_t n = 0; n < size(); ++n) {
    if (source_[n] != n || negate_[n]) return false;
  }
  return true;
}

bool SignedPermutation::is_negated_identity() const {
  for (std::size_t n = 0; n < size(); ++n) {
    if (source_[n] != n || !negate_[n]) return false;
  }
  return true;
}

}  // namespace granular
