#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "granular/dyadic.hpp"
#include "granular/signed_permutation.hpp"

namespace granular {

/// Names one operator of the recursive square-root-of-minus-one family at a
/// given level: index 0 is the identity, 1 is E, and 2..2^level-1 are the
/// remaining roots.
struct OperatorLabel {
  unsigned level;
  std::uint32_t index;

  friend bool operator==(const OperatorLabel&, const OperatorLabel&) = default;
};

/// The root E_index at the label's level, acting on strings of 2^level
/// entries. E_1 = E maps the halves (X, Y) to (-Y, X); higher indices follow
/// the two block forms over the previous level's roots. Every root squares
/// to -Id. Throws IndexOutOfRange unless 1 <= index <= 2^level - 1.
SignedPermutation build_root(const OperatorLabel& label);

/// Same family with index 0 admitted as the identity.
SignedPermutation build_operator(const OperatorLabel& label);

/// The pure imaginary triple containing E_index: {E, E_j, E_(j+2^(level-1)-1)}
/// for j <= 2^(level-1), the mirrored form beyond. The triple satisfies the
/// unit-quaternion table under composition in application order. Requires
/// index >= 2 (identity and E have no partner).
struct QuaternionTriple {
  OperatorLabel e;
  OperatorLabel a;
  OperatorLabel b;
};
QuaternionTriple quaternion_triple(const OperatorLabel& label);

/// Sigma^t where Sigma is the single-step signed cyclic shift on `length`
/// entries (new leading entry = negated old trailing entry). Sigma^(L/2) = E
/// and Sigma has order 2L. Built directly from the exponent, never by
/// repeated composition.
SignedPermutation signed_shift_power(std::size_t length, std::uint64_t exponent);

/// E^(1/2^r) of the level-N tower: the block cyclic shift with one negated
/// wrap entry and block size 2^(N-r). The tower acts on strings of 2^(N+1)
/// entries; (E^(1/2^r))^(2^r) = E exactly, and the finest root E^(1/2^N) (the
/// single-step shift) generates a cyclic group of order 2^(N+2). Requires
/// 0 <= r <= level.
SignedPermutation root_of_e(unsigned level, unsigned r);

/// E^alpha = (E^(1/2^level))^(alpha * 2^level) on 2^(level+1) entries.
/// Requires the scale of alpha to be at most `level` (ScaleTooFine
/// otherwise); a homomorphism in alpha mod 4, with E^2 = -Id and E^4 = Id.
SignedPermutation phase_power(unsigned level, const Dyadic& alpha);

/// Order of the level-N phase generator: 2^(level+2).
std::uint64_t phase_order(unsigned level);

/// Pairwise correlations of {E_j(1,1,...,1)}, 0 <= j,k <= 2^level - 1.
struct OrthogonalityTable {
  unsigned level;
  std::vector<std::vector<Dyadic>> corr;

  bool is_identity_pattern() const;
};
OrthogonalityTable orthogonality_table(unsigned level, unsigned level_limit = 12);

/// One row of the algebra self-check table (the `algebra verify` surface).
struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs the full invariant suite at one level: squares, quaternion tables,
/// orthogonality, tower and phase-group structure, action composition, and
/// self-similar embedding of the previous level.
std::vector<CheckResult> verify_algebra(unsigned level, unsigned level_limit = 12);

}  // namespace granular
