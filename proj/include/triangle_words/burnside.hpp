#pragma once

#include <cstdint>
#include <vector>

#include "triangle_words/finite_group.hpp"
#include "triangle_words/residue.hpp"

namespace triangle_words {

/// #{(x, y) in C x D : xy = z}. Throws mixed_base when the classes come from
/// different groups or z is not an element of their group.
std::int64_t count_products(const ConjClass& c, const ConjClass& d, ElementId z);

/// A triple of conjugacy classes, by index into FiniteGroup::classes().
struct ClassTriple {
  std::size_t c;
  std::size_t d;
  std::size_t e;

  friend bool operator==(const ClassTriple&, const ClassTriple&) = default;
  friend auto operator<=>(const ClassTriple&, const ClassTriple&) = default;
};

/// Class triples (C, D, E) of non-identity elements with orders dividing
/// k, l, m respectively and 1 in CDE, in lexicographic order.
std::vector<ClassTriple> bset_finite(const FiniteGroup& group, Integer k, Integer l, Integer m);

/// Units r mod lcm(k, l, m) with (C^r, D^r, E^r) in B_G for every (C, D, E) in
/// B_G. Throws invalid_signature if an exponent is below 2.
std::vector<UnitResidue> multiplier_set_finite(const FiniteGroup& group, Integer k, Integer l,
                                               Integer m);

/// Whether count_products(C, D, z) = count_products(C^s, D^s, z') for all
/// classes C, D, E, all z in E and all z' in E^s. Throws invalid_s unless
/// gcd(s, exponent) = 1.
bool burnside_count_check(const FiniteGroup& group, Integer s);

/// Certificates for the r = -1 case of the commutator and product relations.
struct MinusOneWitness {
  ElementId z;        // [x, u] = x u x^-1 u^-1
  ElementId w;        // x u, with [x^-1, w] = z^-1
  ElementId y;        // x^-1 z, so x y = z
  ElementId x_prime;  // x^-1
  ElementId y_prime;  // x y^-1 x^-1
  ElementId z_prime;  // z^-1 = x' y'
};

/// Builds the witnesses above and checks both identities; a failed check
/// throws internal_inconsistency.
MinusOneWitness witness_r_minus_one(const FiniteGroup& group, ElementId x, ElementId u);

}  // namespace triangle_words
