#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "granular/angle.hpp"
#include "granular/bitstring.hpp"
#include "granular/hypercomplex.hpp"

namespace granular {

BitString ket_up(unsigned level);    // all +1
BitString ket_down(unsigned level);  // all -1; the bit convention a = 2c - 1 maps all-zeros here

/// Phase operator E^alpha on length-2^level strings. The single-step signed
/// shift on 2^level entries is E^(1/2^(level-1)), so exponents resolve in
/// steps of 1/2^(level-1); finer scales raise ScaleTooFine.
SignedPermutation qubit_phase(unsigned level, const Dyadic& alpha);

/// First entry of E^alpha(s); O(1).
int leading_bit_spin(const BitString& s, const Dyadic& alpha);

struct Superposition {
  BitString value;
  bool rounded = false;  // permissive mode only: selector count was rounded
};

/// The bit-string sum (cos theta E_a + sin theta E_b)(base): entry n comes
/// from E_a(base) on the selector's '+1' rows and from E_b(base) otherwise,
/// where the selector is the signed-shift power with exactly cos(theta)*2^N
/// '+1' rows (the leading block). Quadrants fold by sign: cos < 0 negates the
/// E_a image, sin < 0 the E_b image.
Superposition superpose(const OperatorLabel& a, const OperatorLabel& b, const AngleCos& theta,
                        const BitString& base, Exactness mode = Exactness::strict);

/// Superposition for an angle given by its dyadic sine (whose cosine is then
/// not dyadic): computed with E_a and E_b exchanged and the sine in the
/// selector's role.
Superposition superpose_by_sine(const OperatorLabel& a, const OperatorLabel& b,
                                const Dyadic& sin_value, int cos_sign, const BitString& base,
                                Exactness mode = Exactness::strict);

/// Correlation of the superposition against the raw E_a image, with the
/// exact-law value cos(theta) it is measured against.
struct SuperposeCorrelation {
  Dyadic measured;
  Dyadic expected;
  bool exact;
};
SuperposeCorrelation superpose_correlation(const OperatorLabel& a, const OperatorLabel& b,
                                           const AngleCos& theta,
                                           Exactness mode = Exactness::strict);

/// Smallest alpha in [0, 4) with t = E^alpha(s), scanning the whole cyclic
/// phase group; nullopt when t is not in s's equivalence class.
std::optional<Dyadic> same_class(const BitString& s, const BitString& t);

struct ClassScanEntry {
  AngleCos theta;
  std::optional<Dyadic> witness;  // alpha with superpose(theta) = E^alpha(E_a(base))
};

/// Which grid angles produce superpositions inside the equivalence class of
/// E_a(base). The base matters: on all-ones the two triple images agree on
/// half their entries and the scan degenerates (every |cos| <= 1/2 collapses
/// onto the E_b image); a generic base, e.g. a Champernowne segment, gives
/// the four-point answer.
std::vector<ClassScanEntry> class_scan(const QuaternionTriple& triple,
                                       const std::vector<AngleCos>& grid, const BitString& base,
                                       Exactness mode = Exactness::strict);

/// S1 = E_A(1,...,1) and S2 = (cos theta E_A + sin theta E_D)(1,...,1).
struct EntangledPair {
  BitString s1;
  BitString s2;
  bool rounded = false;
};
EntangledPair entangle_pair(const OperatorLabel& a, const OperatorLabel& d, const AngleCos& theta,
                            Exactness mode = Exactness::strict);

/// A qubit is an equivalence class of bit strings under the phase operators;
/// the stored string is one representative.
struct GranularQubit {
  unsigned level;
  QuaternionTriple triple;
  BitString representative;
};
GranularQubit phase_shift(const GranularQubit& q, const Dyadic& alpha);

/// N bit strings of length 2^N; equivalently one digit string of 2^N
/// base-2^N digits (digit n packs bit n of every string, string i at bit i).
class GranularRegister {
 public:
  GranularRegister(unsigned level, std::vector<BitString> strings);

  unsigned level() const { return level_; }
  const std::vector<BitString>& strings() const { return strings_; }

 private:
  unsigned level_;
  std::vector<BitString> strings_;
};

std::vector<std::uint32_t> encode_register(const GranularRegister& reg);
GranularRegister decode_register(unsigned level, const std::vector<std::uint32_t>& digits);
std::vector<std::vector<Dyadic>> register_correlations(const GranularRegister& reg);

/// corr(E^alpha(s), s) over the full phase group, as (alpha, correlation).
std::vector<std::pair<Dyadic, Dyadic>> autocorrelation_profile(const BitString& s);

/// Where the phase operators distribute over the superposition rule. For each
/// (alpha, theta): does E^alpha(superpose) equal the blend of the
/// phase-shifted images under the unchanged selector, under the selector
/// conjugated by the shift, and under pre-composed operators E^alpha E_a,
/// E^alpha E_b. The conjugated form is an identity; the others are data.
struct DistributivityRecord {
  Dyadic alpha;
  AngleCos theta;
  bool same_selector_post;
  bool conjugated_selector_post;
  bool same_selector_pre;
};
std::vector<DistributivityRecord> distributivity_report(const QuaternionTriple& triple);

}  // namespace granular
