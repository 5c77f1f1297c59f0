#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "triangle_words/residue.hpp"

namespace triangle_words {

/// The exponent triple (k, l, m), each at least 2.
class TriangleSignature {
 public:
  /// Throws invalid_signature if any entry is below 2.
  TriangleSignature(Integer k, Integer l, Integer m);

  Integer k() const noexcept { return k_; }
  Integer l() const noexcept { return l_; }
  Integer m() const noexcept { return m_; }

  Integer lcm() const noexcept;
  /// k*l*m, the common denominator of points of H.
  Integer volume() const noexcept { return k_ * l_ * m_; }

  /// Sign of 1/k + 1/l + 1/m - 1: positive for spherical, zero for euclidean
  /// and negative for hyperbolic triples.
  int curvature_sign() const noexcept;
  bool is_spherical() const noexcept { return curvature_sign() > 0; }
  bool is_hyperbolic() const noexcept { return curvature_sign() < 0; }

  friend bool operator==(const TriangleSignature&, const TriangleSignature&) = default;

  std::string to_string() const;

 private:
  Integer k_;
  Integer l_;
  Integer m_;
};

/// The element (a/k, b/l, c/m) of H = (1/k Z/Z) + (1/l Z/Z) + (1/m Z/Z),
/// stored by its numerators reduced into [0, k), [0, l), [0, m).
class LatticePoint {
 public:
  LatticePoint(const TriangleSignature& signature, Integer a, Integer b, Integer c);

  const TriangleSignature& signature() const noexcept { return signature_; }
  Integer a() const noexcept { return a_; }
  Integer b() const noexcept { return b_; }
  Integer c() const noexcept { return c_; }

  bool all_nonzero() const noexcept { return a_ != 0 && b_ != 0 && c_ != 0; }

  /// Scalar action r * (a/k, b/l, c/m) = (ra/k, rb/l, rc/m).
  LatticePoint scaled(Integer r) const;

  /// a*lm + b*km + c*kl: the sum of representatives in [0, 1) scaled by klm.
  Integer scaled_sum() const noexcept;

  friend bool operator==(const LatticePoint& lhs, const LatticePoint& rhs) {
    return lhs.signature_ == rhs.signature_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ &&
           lhs.c_ == rhs.c_;
  }

  std::string to_string() const;

 private:
  TriangleSignature signature_;
  Integer a_;
  Integer b_;
  Integer c_;
};

enum class RegionTag { s, neg_s, t, none };

std::string_view to_string(RegionTag tag) noexcept;

/// Classifies a point against the open simplex S, its negative -S and the
/// zero-sum set T. Points with a zero coordinate are always `none`.
/// Exact integer arithmetic only.
RegionTag region_of(const LatticePoint& point);

/// All points of H in lexicographic (a, b, c) order.
std::vector<LatticePoint> lattice_points(const TriangleSignature& signature);

/// Points of H lying in S, -S or T, lexicographic order.
std::vector<LatticePoint> bset_points(const TriangleSignature& signature);

/// Units r mod lcm(k, l, m) with r * (H n (S u -S)) = H n (S u -S), by full
/// enumeration of H.
std::vector<UnitResidue> multiplier_set(const TriangleSignature& signature);

/// Units r mod lcm(k, m) such that (-ra, ra, rc) stays in H n (S u -S u T) for
/// every (a, b, c) there, signature (k, k, m). Computed by enumeration and
/// compared against the emptiness shortcut (throws internal_inconsistency on
/// disagreement).
std::vector<UnitResidue> n_set(Integer k, Integer m);

/// The shortcut: the whole unit group when H n (S u -S u T) is empty, else
/// nothing.
std::vector<UnitResidue> n_set_by_emptiness(Integer k, Integer m);

struct FiberCount {
  Integer enumerated;
  Integer closed_form;
};

/// #{z in (1/m)Z/Z : (a/k, b/l, z) in S} by enumeration, alongside
/// ceil(m - am/k - bm/l) - 1. Requires 0 < a < k, 0 < b < l and
/// a/k + b/l < 1 (invalid_fiber otherwise); throws internal_inconsistency if
/// the two counts differ.
FiberCount fiber_count(const TriangleSignature& signature, Integer a, Integer b);

}  // namespace triangle_words
