#pragma once

#include <cstdint>
#include <vector>

#include "granular/bitstring.hpp"

namespace granular {

/// Signed permutation on L indices, acting on length-L bit strings by
///   output entry n = sign(n) * input[source(n)].
/// In the row-vector matrix convention (x maps to x*M) this is a monomial
/// matrix with entries +-1; source/sign pairs are stored instead of the
/// matrix, so application is O(L) at any size.
class SignedPermutation {
 public:
  /// Validates that source is a bijection.
  SignedPermutation(std::vector<std::uint32_t> source, std::vector<std::uint8_t> negate);

  static SignedPermutation identity(std::size_t n);

  std::size_t size() const { return source_.size(); }
  std::uint32_t source(std::size_t n) const { return source_[n]; }
  int sign(std::size_t n) const { return negate_[n] ? -1 : 1; }

  BitString apply(const BitString& s) const;

  /// a * b: apply a, then b (the matrix product a.b in the row-vector
  /// convention, x -> (x.a).b).
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);

  SignedPermutation pow(std::uint64_t k) const;
  SignedPermutation negated() const;

  bool is_identity() const;
  bool is_negated_identity() const;

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) = default;

 private:
  struct Unchecked {};
  SignedPermutation(Unchecked, std::vector<std::uint32_t> source, std::vector<std::uint8_t> negate)
      : source_(std::move(source)), negate_(std::move(negate)) {}

  std::vector<std::uint32_t> source_;
  std::vector<std::uint8_t> negate_;  // 1 = negate

  friend SignedPermutation make_unchecked(std::vector<std::uint32_t>, std::vector<std::uint8_t>);
};

/// Internal factory for construction sites that build bijections by design.
SignedPermutation make_unchecked(std::vector<std::uint32_t> source,
                                 std::vector<std::uint8_t> negate);

}  // namespace granular
