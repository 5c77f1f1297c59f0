#pragma once

#include <memory>

#include "triangle_words/finite_group.hpp"
#include "triangle_words/residue.hpp"

namespace triangle_words {

/// A finite permutation group generated by a and c with
/// a^k = (a^-1 c)^l = c^m = 1 and order 2 / (1/k + 1/l + 1/m - 1).
struct VonDyckRealization {
  std::shared_ptr<const FiniteGroup> group;
  ElementId a;
  ElementId c;
  Integer k;
  Integer l;
  Integer m;
};

/// Realization of a spherical triple (1/k + 1/l + 1/m > 1). Built from a
/// dihedral, A4, S4 or A5 model and re-labelled for permuted triples. The
/// relations, exact generator orders and group order are checked before
/// returning. Throws not_finite for non-spherical triples and
/// invalid_signature for entries below 2. Results are cached.
const VonDyckRealization& vondyck(Integer k, Integer l, Integer m);

/// Conjugators with a^r * g (a^-1 c)^r g^-1 = h c^r h^-1.
struct UniversalWitness {
  ElementId g;
  ElementId h;
};

/// Lexicographically least witness (g, h) in the realization of (k, l, m).
/// `r` must be a unit modulo lcm(k, l, m) (invalid_r otherwise). Throws
/// internal_inconsistency if the search comes up empty.
UniversalWitness universal_witness(Integer k, Integer l, Integer m, const UnitResidue& r);
UniversalWitness universal_witness(const VonDyckRealization& realization, const UnitResidue& r);

/// Re-checks a witness by direct multiplication.
bool verify_universal_witness(const VonDyckRealization& realization, const UnitResidue& r,
                              const UniversalWitness& witness);

/// In the realization of (k, k, m) with c_i = a^i c a^-i, whether
/// c_{r-1} ... c_1 c_0 = a^r (a^-1 c)^r, where r is first replaced by its least
/// positive representative modulo lcm(k, m).
bool lemma42_check(Integer k, Integer m, Integer r);

}  // namespace triangle_words
