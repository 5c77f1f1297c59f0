#include "triangle_words/lattice.hpp"

#include <numeric>

#include "triangle_words/error.hpp"
#include "wide_int.hpp"

namespace triangle_words {

namespace {

std::size_t flat_index(const TriangleSignature& sig, Integer a, Integer b, Integer c) {
  return static_cast<std::size_t>((a * sig.l() + b) * sig.m() + c);
}

bool in_s_or_neg_s(RegionTag tag) { return tag == RegionTag::s || tag == RegionTag::neg_s; }

bool tagged(RegionTag tag) { return tag != RegionTag::none; }

// Membership of every point of H in the region selected by `keep`, indexed by
// flat_index.
template <typename Pred>
std::vector<bool> region_mask(const TriangleSignature& sig, Pred keep) {
  std::vector<bool> mask(static_cast<std::size_t>(sig.volume()), false);
  for (Integer a = 1; a < sig.k(); ++a) {
    for (Integer b = 1; b < sig.l(); ++b) {
      for (Integer c = 1; c < sig.m(); ++c) {
        if (keep(region_of(LatticePoint(sig, a, b, c)))) {
          mask[flat_index(sig, a, b, c)] = true;
        }
      }
    }
  }
  return mask;
}

}  // namespace

TriangleSignature::TriangleSignature(Integer k, Integer l, Integer m) : k_(k), l_(l), m_(m) {
  if (k < 2 || l < 2 || m < 2) {
    fail(ErrorCode::invalid_signature, "signature entries must be at least 2, got " + to_string());
  }
}

Integer TriangleSignature::lcm() const noexcept { return std::lcm(std::lcm(k_, l_), m_); }

int TriangleSignature::curvature_sign() const noexcept {
  const Integer lhs = l_ * m_ + k_ * m_ + k_ * l_;
  const Integer rhs = k_ * l_ * m_;
  return (lhs > rhs) - (lhs < rhs);
}

std::string TriangleSignature::to_string() const {
  return "(" + std::to_string(k_) + "," + std::to_string(l_) + "," + std::to_string(m_) + ")";
}

LatticePoint::LatticePoint(const TriangleSignature& signature, Integer a, Integer b, Integer c)
    : signature_(signature),
      a_(mod_floor(a, signature.k())),
      b_(mod_floor(b, signature.l())),
      c_(mod_floor(c, signature.m())) {}

LatticePoint LatticePoint::scaled(Integer r) const {
  const Integer ra = static_cast<Integer>(static_cast<WideInt>(r) * a_ % signature_.k());
  const Integer rb = static_cast<Integer>(static_cast<WideInt>(r) * b_ % signature_.l());
  const Integer rc = static_cast<Integer>(static_cast<WideInt>(r) * c_ % signature_.m());
  return LatticePoint(signature_, ra, rb, rc);
}

Integer LatticePoint::scaled_sum() const noexcept {
  const auto& s = signature_;
  return a_ * s.l() * s.m() + b_ * s.k() * s.m() + c_ * s.k() * s.l();
}

std::string LatticePoint::to_string() const {
  return "(" + std::to_string(a_) + "/" + std::to_string(signature_.k()) + "," +
         std::to_string(b_) + "/" + std::to_string(signature_.l()) + "," + std::to_string(c_) +
         "/" + std::to_string(signature_.m()) + ")";
}

std::string_view to_string(RegionTag tag) noexcept {
  switch (tag) {
    case RegionTag::s: return "S";
    case RegionTag::neg_s: return "NEG_S";
    case RegionTag::t: return "T";
    case RegionTag::none: return "NONE";
  }
  return "NONE";
}

RegionTag region_of(const LatticePoint& point) {
  if (!point.all_nonzero()) return RegionTag::none;
  const Integer sum = point.scaled_sum();
  const Integer unit = point.signature().volume();
  if (sum < unit) return RegionTag::s;
  if (sum > 2 * unit) return RegionTag::neg_s;
  if (sum % unit == 0) return RegionTag::t;
  return RegionTag::none;
}

std::vector<LatticePoint> lattice_points(const TriangleSignature& signature) {
  std::vector<LatticePoint> points;
  points.reserve(static_cast<std::size_t>(signature.volume()));
  for (Integer a = 0; a < signature.k(); ++a) {
    for (Integer b = 0; b < signature.l(); ++b) {
      for (Integer c = 0; c < signature.m(); ++c) {
        points.emplace_back(signature, a, b, c);
      }
    }
  }
  return points;
}

std::vector<LatticePoint> bset_points(const TriangleSignature& signature) {
  std::vector<LatticePoint> out;
  for (const auto& p : lattice_points(signature)) {
    if (tagged(region_of(p))) out.push_back(p);
  }
  return out;
}

std::vector<UnitResidue> multiplier_set(const TriangleSignature& signature) {
  const auto mask = region_mask(signature, in_s_or_neg_s);
  std::vector<LatticePoint> region;
  for (const auto& p : lattice_points(signature)) {
    if (mask[flat_index(signature, p.a(), p.b(), p.c())]) region.push_back(p);
  }

  // Scaling by a unit is injective on H, so mapping the finite region into
  // itself is the same as mapping it onto itself.
  std::vector<UnitResidue> out;
  for (const auto& r : unit_group(signature.lcm())) {
    bool preserved = true;
    for (const auto& p : region) {
      const auto image = p.scaled(r.value());
      if (!mask[flat_index(signature, image.a(), image.b(), image.c())]) {
        preserved = false;
        break;
      }
    }
    if (preserved) out.push_back(r);
  }
  return out;
}

std::vector<UnitResidue> n_set_by_emptiness(Integer k, Integer m) {
  const TriangleSignature signature(k, k, m);
  if (bset_points(signature).empty()) return unit_group(signature.lcm());
  return {};
}

std::vector<UnitResidue> n_set(Integer k, Integer m) {
  const TriangleSignature signature(k, k, m);
  const auto mask = region_mask(signature, tagged);
  const auto region = bset_points(signature);

  std::vector<UnitResidue> out;
  for (const auto& r : unit_group(signature.lcm())) {
    bool preserved = true;
    for (const auto& p : region) {
      const LatticePoint image(signature, -r.value() * p.a(), r.value() * p.a(),
                               r.value() * p.c());
      if (!mask[flat_index(signature, image.a(), image.b(), image.c())]) {
        preserved = false;
        break;
      }
    }
    if (preserved) out.push_back(r);
  }

  if (out != n_set_by_emptiness(k, m)) {
    fail(ErrorCode::internal_inconsistency,
         "direct N-set enumeration disagrees with the emptiness criterion for " +
             signature.to_string());
  }
  return out;
}

FiberCount fiber_count(const TriangleSignature& signature, Integer a, Integer b) {
  const Integer k = signature.k(), l = signature.l(), m = signature.m();
  if (a <= 0 || a >= k || b <= 0 || b >= l || a * l + b * k >= k * l) {
    fail(ErrorCode::invalid_fiber, "need 0 < a < k, 0 < b < l and a/k + b/l < 1");
  }
  Integer enumerated = 0;
  for (Integer c = 0; c < m; ++c) {
    if (region_of(LatticePoint(signature, a, b, c)) == RegionTag::s) ++enumerated;
  }
  // ceil(m - am/k - bm/l) - 1 = ceil((mkl - aml - bmk) / kl) - 1, numerator > 0.
  const Integer numerator = m * (k * l - a * l - b * k);
  const Integer denominator = k * l;
  const Integer closed_form = (numerator + denominator - 1) / denominator - 1;
  if (enumerated != closed_form) {
    fail(ErrorCode::internal_inconsistency,
         "fiber count " + std::to_string(enumerated) + " differs from closed form " +
             std::to_string(closed_form) + " at " + signature.to_string());
  }
  return {enumerated, closed_form};
}

}  // namespace triangle_words
