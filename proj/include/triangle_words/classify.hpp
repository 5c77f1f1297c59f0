#pragma once

#include <string_view>

#include "triangle_words/residue.hpp"

namespace triangle_words {

/// Which clause of the classification settled the verdict. When several apply
/// the first in this order is reported.
enum class VerdictReason {
  sum_at_least_one,
  r_is_pm1,
  rstar_is_pm1,
  none,
};

std::string_view to_string(VerdictReason reason) noexcept;

/// Whether every group is (k,l,m,r)-quasi-Burnside.
struct BurnsideVerdict {
  bool universal;
  VerdictReason reason;  // never rstar_is_pm1
};

/// Whether every group is (k,m,r)-quasi-Honda.
struct HondaVerdict {
  bool universal;
  VerdictReason reason;
};

/// universal iff 1/k + 1/l + 1/m >= 1 or r = +-1 mod lcm(k, l, m).
/// `r` is any integer representative; throws invalid_r if it is not a unit
/// and invalid_signature if an exponent is below 2.
BurnsideVerdict classify_burnside(Integer k, Integer l, Integer m, Integer r);
BurnsideVerdict classify_burnside(Integer k, Integer l, Integer m, const UnitResidue& r);

/// universal iff 2/k + 1/m >= 1, or r = +-1, or gcd(k, m) <= 2 and r* = +-1,
/// everything modulo lcm(k, m).
HondaVerdict classify_honda(Integer k, Integer m, Integer r);
HondaVerdict classify_honda(Integer k, Integer m, const UnitResidue& r);

/// The same question answered through the (k,k,m) Burnside classifier
/// applied to r and, when gcd(k, m) <= 2, to r*.
HondaVerdict classify_honda_via_burnside(Integer k, Integer m, Integer r);
HondaVerdict classify_honda_via_burnside(Integer k, Integer m, const UnitResidue& r);

}  // namespace triangle_words
