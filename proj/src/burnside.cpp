#include "triangle_words/burnside.hpp"

#include <algorithm>
#include <numeric>

#include "triangle_words/error.hpp"

namespace triangle_words {

namespace {

// hist[(ci * classes + di) * order + z] = #{(x, y) in Ci x Di : xy = z}.
std::vector<std::int64_t> product_histograms(const FiniteGroup& group) {
  const std::size_t n = group.order();
  const std::size_t h = group.classes().size();
  std::vector<std::int64_t> hist(h * h * n, 0);
  for (ElementId x = 0; x < n; ++x) {
    const auto cx = group.class_index(x);
    for (ElementId y = 0; y < n; ++y) {
      const auto cy = group.class_index(y);
      ++hist[(cx * h + cy) * n + group.mul(x, y)];
    }
  }
  return hist;
}

bool contains_identity_product(const FiniteGroup& group, const ClassTriple& t) {
  // Conjugating a solution moves c to the class representative, so it is
  // enough to test (c d)^-1 in E for the fixed representative c.
  const auto c = group.classes()[t.c].representative();
  for (const auto d : group.classes()[t.d].members) {
    if (group.class_index(group.inv(group.mul(c, d))) == t.e) return true;
  }
  return false;
}

}  // namespace

std::int64_t count_products(const ConjClass& c, const ConjClass& d, ElementId z) {
  if (c.group == nullptr || c.group != d.group) {
    fail(ErrorCode::mixed_base, "conjugacy classes belong to different groups");
  }
  const FiniteGroup& group = *c.group;
  if (!group.contains(z)) fail(ErrorCode::mixed_base, "target element is not in the group");
  std::int64_t count = 0;
  for (const auto x : c.members) {
    for (const auto y : d.members) {
      if (group.mul(x, y) == z) ++count;
    }
  }
  return count;
}

std::vector<ClassTriple> bset_finite(const FiniteGroup& group, Integer k, Integer l, Integer m) {
  std::vector<ClassTriple> out;
  const auto ck = group.torsion_classes(k);
  const auto cl = group.torsion_classes(l);
  const auto cm = group.torsion_classes(m);
  for (const auto c : ck) {
    for (const auto d : cl) {
      for (const auto e : cm) {
        const ClassTriple t{c, d, e};
        if (contains_identity_product(group, t)) out.push_back(t);
      }
    }
  }
  return out;
}

std::vector<UnitResidue> multiplier_set_finite(const FiniteGroup& group, Integer k, Integer l,
                                               Integer m) {
  if (k < 2 || l < 2 || m < 2) {
    fail(ErrorCode::invalid_signature, "exponents must be at least 2");
  }
  const auto triples = bset_finite(group, k, l, m);
  const Integer n = std::lcm(std::lcm(k, l), m);
  std::vector<UnitResidue> out;
  for (const auto& r : unit_group(n)) {
    const bool closed = std::all_of(triples.begin(), triples.end(), [&](const ClassTriple& t) {
      const ClassTriple image{group.class_power(t.c, r.value()), group.class_power(t.d, r.value()),
                              group.class_power(t.e, r.value())};
      return std::binary_search(triples.begin(), triples.end(), image);
    });
    if (closed) out.push_back(r);
  }
  return out;
}

bool burnside_count_check(const FiniteGroup& group, Integer s) {
  if (std::gcd(s, group.exponent()) != 1) {
    fail(ErrorCode::invalid_s, "s = " + std::to_string(s) + " is not coprime to the exponent " +
                                   std::to_string(group.exponent()));
  }
  const auto hist = product_histograms(group);
  const std::size_t n = group.order();
  const std::size_t h = group.classes().size();
  for (std::size_t c = 0; c < h; ++c) {
    for (std::size_t d = 0; d < h; ++d) {
      const auto* base = &hist[(c * h + d) * n];
      const auto* powered = &hist[(group.class_power(c, s) * h + group.class_power(d, s)) * n];
      for (const auto& e : group.classes()) {
        const auto& target = group.classes()[group.class_power(e.index, s)];
        const auto expected = base[e.representative()];
        for (const auto z : e.members) {
          if (base[z] != expected) return false;
        }
        for (const auto z : target.members) {
          if (powered[z] != expected) return false;
        }
      }
    }
  }
  return true;
}

MinusOneWitness witness_r_minus_one(const FiniteGroup& group, ElementId x, ElementId u) {
  if (!group.contains(x) || !group.contains(u)) {
    fail(ErrorCode::invalid_letter, "element id out of range");
  }
  MinusOneWitness out{};
  out.z = group.commutator(x, u);
  out.w = group.mul(x, u);
  out.y = group.mul(group.inv(x), out.z);
  out.x_prime = group.inv(x);
  out.y_prime = group.mul(group.mul(x, group.inv(out.y)), group.inv(x));
  out.z_prime = group.inv(out.z);

  if (group.commutator(out.x_prime, out.w) != out.z_prime) {
    fail(ErrorCode::internal_inconsistency, "[x^-1, xu] differs from [x, u]^-1");
  }
  if (group.mul(x, out.y) != out.z || group.mul(out.x_prime, out.y_prime) != out.z_prime) {
    fail(ErrorCode::internal_inconsistency, "inverted product relation does not hold");
  }
  return out;
}

}  // namespace triangle_words
