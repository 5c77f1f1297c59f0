#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "triangle_words/finite_group.hpp"
#include "triangle_words/words.hpp"

namespace triangle_words {

/// The automorphism psi of G * <b> with psi = phi on G and psi(b) = p b.
class TwistedAutomorphism {
 public:
  /// `phi` lists phi(x) for every id x. Throws invalid_automorphism unless phi
  /// is a bijective homomorphism, invalid_letter if p is out of range.
  TwistedAutomorphism(std::shared_ptr<const FiniteGroup> base, std::vector<ElementId> phi,
                      ElementId p);

  const FiniteGroup& base() const noexcept { return *base_; }
  const std::shared_ptr<const FiniteGroup>& base_ptr() const noexcept { return base_; }
  ElementId phi(ElementId x) const { return phi_.at(x); }
  const std::vector<ElementId>& phi_map() const noexcept { return phi_; }
  ElementId p() const noexcept { return p_; }

  /// Least d >= 1 with phi^d = id.
  std::size_t phi_order() const;

 private:
  std::shared_ptr<const FiniteGroup> base_;
  std::vector<ElementId> phi_;
  ElementId p_;
};

/// psi(v), letter by letter: signs are kept and each base letter becomes
/// phi(v_2i) with p attached on the side of every adjacent b (right of it for
/// a following b, inverse on the left for a preceding b^-1). The result is
/// reduced and as long as v. Throws mixed_base when v uses another base.
ReducedWord apply_twisted(const TwistedAutomorphism& t, const ReducedWord& v);

/// psi(v) by substituting phi(g), p b and b^-1 p^-1 and normalizing.
ReducedWord apply_twisted_by_substitution(const TwistedAutomorphism& t, const ReducedWord& v);

/// Whether psi^d is the identity, given phi^d = id: checked on (1, b, 1) by
/// iterating apply_twisted and cross-checked against
/// phi^{d-1}(p) ... phi(p) p = 1. Throws invalid_order for d < 1 or
/// phi^d != id.
bool twisted_order_check(const TwistedAutomorphism& t, Integer d);

/// A solution of one of the four equations, numbered as
///   1: phi(x) x^-1         = y q y^-1
///   2: phi(x) p x^-1       = y q y^-1
///   3: p^-1 phi(x) x^-1    = y q y^-1
///   4: p^-1 phi(x) p x^-1  = y q y^-1
struct BElimination {
  int case_index;
  ElementId x;
  ElementId y;
  friend bool operator==(const BElimination&, const BElimination&) = default;
};

/// First solution in (case, x, y) order, or nullopt when none exists.
std::optional<BElimination> eliminate_b(const TwistedAutomorphism& t, ElementId q);

struct VWPair {
  ReducedWord v;
  ReducedWord w;
};

/// The words v, w matching a solution:
///   case 1: v = x,          w = y
///   case 2: v = x b,        w = y
///   case 3: v = b^-1 x,     w = b^-1 y
///   case 4: v = b^-1 x b,   w = b^-1 y
/// Throws invalid_case outside 1..4.
VWPair construct_vw(std::shared_ptr<const BaseGroup> base, int case_index, ElementId x,
                    ElementId y);

/// psi(v) v^-1 == w q w^-1 in G * <b>.
bool verify_vw(const TwistedAutomorphism& t, ElementId q, const VWPair& pair);

}  // namespace triangle_words
