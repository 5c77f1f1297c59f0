#include "triangle_words/vondyck.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "triangle_words/error.hpp"
#include "triangle_words/lattice.hpp"

namespace triangle_words {

namespace {

using Triple = std::array<Integer, 3>;

struct Model {
  Triple orders;  // orders of a, a^-1 c, c
  Permutation a;
  Permutation c;
};

// Base model for a sorted spherical triple.
Model base_model(const Triple& sorted) {
  const auto [k, l, m] = sorted;
  if (k == 2 && l == 2 && m == 2) {
    return {sorted, Permutation::from_cycles("(1 2)", 4), Permutation::from_cycles("(3 4)", 4)};
  }
  if (k == 2 && l == 2) {
    // Dihedral group of the m-gon: a reflection and a rotation.
    std::vector<std::uint32_t> reflect(m), rotate(m);
    for (Integer i = 0; i < m; ++i) {
      reflect[i] = static_cast<std::uint32_t>((m - i) % m);
      rotate[i] = static_cast<std::uint32_t>((i + 1) % m);
    }
    return {sorted, Permutation(reflect), Permutation(rotate)};
  }
  if (k == 2 && l == 3 && m == 3) {
    return {sorted, Permutation::from_cycles("(1 2)(3 4)", 4), Permutation::from_cycles("(1 2 3)", 4)};
  }
  if (k == 2 && l == 3 && m == 4) {
    return {sorted, Permutation::from_cycles("(1 2)", 4), Permutation::from_cycles("(1 2 3 4)", 4)};
  }
  if (k == 2 && l == 3 && m == 5) {
    return {sorted, Permutation::from_cycles("(2 3)(4 5)", 5),
            Permutation::from_cycles("(1 2 3 4 5)", 5)};
  }
  fail(ErrorCode::internal_inconsistency, "no model for a spherical triple");
}

// (a, c) -> (a^-1 c, a^-1 c a) exchanges the first two orders.
Model swap_first(const Model& x) {
  const auto ai = x.a.inverse();
  return {{x.orders[1], x.orders[0], x.orders[2]}, ai * x.c, ai * x.c * x.a};
}

// (a, c) -> (a^-1, a^-1 c) exchanges the last two orders.
Model swap_last(const Model& x) {
  const auto ai = x.a.inverse();
  return {{x.orders[0], x.orders[2], x.orders[1]}, ai, ai * x.c};
}

Model model_for(const Triple& target) {
  Triple sorted = target;
  std::sort(sorted.begin(), sorted.end());
  std::deque<Model> queue{base_model(sorted)};
  std::vector<Triple> seen{sorted};
  while (!queue.empty()) {
    Model cur = queue.front();
    queue.pop_front();
    if (cur.orders == target) return cur;
    for (auto next : {swap_first(cur), swap_last(cur)}) {
      if (std::find(seen.begin(), seen.end(), next.orders) == seen.end()) {
        seen.push_back(next.orders);
        queue.push_back(std::move(next));
      }
    }
  }
  fail(ErrorCode::internal_inconsistency, "triple not reachable from its sorted model");
}

VonDyckRealization build(Integer k, Integer l, Integer m) {
  const Model model = model_for({k, l, m});
  auto group = enumerate_group({model.a, model.c});
  const auto a = *group->find(model.a);
  const auto c = *group->find(model.c);
  const auto b = group->mul(group->inv(a), c);

  const auto label = TriangleSignature(k, l, m).to_string();
  if (group->element_order(a) != static_cast<std::size_t>(k) ||
      group->element_order(b) != static_cast<std::size_t>(l) ||
      group->element_order(c) != static_cast<std::size_t>(m)) {
    fail(ErrorCode::internal_inconsistency, "generator orders wrong for " + label);
  }
  // |G| = 2klm / (lm + km + kl - klm).
  const Integer numerator = 2 * k * l * m;
  const Integer denominator = l * m + k * m + k * l - k * l * m;
  if (numerator % denominator != 0 ||
      static_cast<Integer>(group->order()) != numerator / denominator) {
    fail(ErrorCode::internal_inconsistency, "group order wrong for " + label);
  }
  return {std::move(group), a, c, k, l, m};
}

void require_unit_mod_lcm(const VonDyckRealization& v, const UnitResidue& r) {
  const Integer n = std::lcm(std::lcm(v.k, v.l), v.m);
  if (r.modulus() != n) {
    fail(ErrorCode::invalid_r, "r must be taken modulo " + std::to_string(n));
  }
}

}  // namespace

const VonDyckRealization& vondyck(Integer k, Integer l, Integer m) {
  const TriangleSignature signature(k, l, m);
  if (!signature.is_spherical()) {
    fail(ErrorCode::not_finite, "no finite realization for " + signature.to_string());
  }
  static std::mutex mutex;
  static std::map<Triple, VonDyckRealization> cache;
  const std::lock_guard lock(mutex);
  auto it = cache.find({k, l, m});
  if (it == cache.end()) it = cache.emplace(Triple{k, l, m}, build(k, l, m)).first;
  return it->second;
}

UniversalWitness universal_witness(const VonDyckRealization& v, const UnitResidue& r) {
  require_unit_mod_lcm(v, r);
  const FiniteGroup& group = *v.group;
  const auto e = r.value();
  const auto ar = group.power(v.a, e);
  const auto br = group.power(group.mul(group.inv(v.a), v.c), e);
  const auto cr = group.power(v.c, e);

  // Least h for each conjugate of c^r.
  constexpr auto kNone = static_cast<ElementId>(-1);
  std::vector<ElementId> least_h(group.order(), kNone);
  for (ElementId h = 0; h < group.order(); ++h) {
    auto& slot = least_h[group.conjugate(h, cr)];
    if (slot == kNone) slot = h;
  }
  for (ElementId g = 0; g < group.order(); ++g) {
    const auto lhs = group.mul(ar, group.conjugate(g, br));
    if (least_h[lhs] != kNone) return {g, least_h[lhs]};
  }
  fail(ErrorCode::internal_inconsistency,
       "no witness in the realization of " + TriangleSignature(v.k, v.l, v.m).to_string());
}

UniversalWitness universal_witness(Integer k, Integer l, Integer m, const UnitResidue& r) {
  return universal_witness(vondyck(k, l, m), r);
}

bool verify_universal_witness(const VonDyckRealization& v, const UnitResidue& r,
                              const UniversalWitness& w) {
  const FiniteGroup& group = *v.group;
  if (!group.contains(w.g) || !group.contains(w.h)) return false;
  const auto e = r.value();
  const auto b = group.mul(group.inv(v.a), v.c);
  const auto lhs = group.mul(group.power(v.a, e), group.conjugate(w.g, group.power(b, e)));
  return lhs == group.conjugate(w.h, group.power(v.c, e));
}

bool lemma42_check(Integer k, Integer m, Integer r) {
  const auto& v = vondyck(k, k, m);
  const FiniteGroup& group = *v.group;
  Integer rep = mod_floor(r, std::lcm(k, m));
  if (rep == 0) rep = std::lcm(k, m);

  ElementId lhs = BaseGroup::kIdentity;
  for (Integer i = 0; i < rep; ++i) {
    lhs = group.mul(group.conjugate(group.power(v.a, i), v.c), lhs);
  }
  const auto b = group.mul(group.inv(v.a), v.c);
  const auto rhs = group.mul(group.power(v.a, rep), group.power(b, rep));
  return lhs == rhs;
}

}  // namespace triangle_words
