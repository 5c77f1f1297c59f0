#include "triangle_words/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <random>
#include <string_view>

#include "triangle_words/error.hpp"

namespace triangle_words {

namespace {

constexpr ElementId kUnset = static_cast<ElementId>(-1);

// Exhaustive associativity up to this order, random triples beyond.
constexpr std::size_t kExhaustiveAssociativity = 100;
constexpr int kRandomTriples = 20000;

std::vector<ElementId> closure(const FiniteGroup& group, const std::vector<ElementId>& gens) {
  std::vector<bool> seen(group.order(), false);
  std::vector<ElementId> out{BaseGroup::kIdentity};
  seen[BaseGroup::kIdentity] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto g : gens) {
      const auto y = group.mul(out[i], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

// Extends generator images to a map on the whole group. Returns an empty
// vector when the assignment is not a well-defined bijective homomorphism.
std::vector<ElementId> extend_to_automorphism(const FiniteGroup& group,
                                              const std::vector<ElementId>& gens,
                                              const std::vector<ElementId>& images) {
  std::vector<ElementId> phi(group.order(), kUnset);
  phi[BaseGroup::kIdentity] = BaseGroup::kIdentity;
  std::deque<ElementId> queue{BaseGroup::kIdentity};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto y = group.mul(x, gens[i]);
      const auto image = group.mul(phi[x], images[i]);
      if (phi[y] == kUnset) {
        phi[y] = image;
        queue.push_back(y);
      } else if (phi[y] != image) {
        return {};
      }
    }
  }
  std::vector<bool> hit(group.order(), false);
  for (const auto v : phi) {
    if (v == kUnset || hit[v]) return {};
    hit[v] = true;
  }
  return phi;
}

}  // namespace

std::size_t group_cap_from_env() {
  const char* raw = std::getenv("TRIANGLE_WORDS_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultGroupCap;
  const std::string_view text(raw);
  std::size_t cap = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || end != text.data() + text.size() || cap == 0) {
    fail(ErrorCode::parse_error, "TRIANGLE_WORDS_CAP must be a positive integer");
  }
  return cap;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(
    const std::vector<std::vector<std::int64_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorCode::parse_error, "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorCode::parse_error, "multiplication table is not square");
    for (const auto v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        fail(ErrorCode::parse_error, "table entry " + std::to_string(v) + " out of range");
      }
    }
  }

  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  group->order_ = n;
  group->table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      group->table_[x * n + y] = static_cast<ElementId>(table[x][y]);
    }
  }
  const FiniteGroup& g = *group;

  for (ElementId x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) {
      fail(ErrorCode::parse_error, "element 0 is not the identity");
    }
  }
  // Rows and columns must be permutations (each equation ax = b solvable).
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (ElementId y = 0; y < n; ++y) {
      const auto r = g.mul(static_cast<ElementId>(x), y);
      const auto c = g.mul(y, static_cast<ElementId>(x));
      if (row_seen[r] || col_seen[c]) fail(ErrorCode::parse_error, "table is not a Latin square");
      row_seen[r] = col_seen[c] = true;
    }
  }
  group->inverse_.assign(n, 0);
  for (ElementId x = 0; x < n; ++x) {
    ElementId y = 0;
    while (g.mul(x, y) != 0) ++y;
    if (g.mul(y, x) != 0) fail(ErrorCode::parse_error, "left and right inverses differ");
    group->inverse_[x] = y;
  }

  auto associative = [&g](ElementId x, ElementId y, ElementId z) {
    return g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
  };
  if (n <= kExhaustiveAssociativity) {
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y)
        for (ElementId z = 0; z < n; ++z)
          if (!associative(x, y, z)) fail(ErrorCode::parse_error, "table is not associative");
  } else {
    std::mt19937_64 rng(0x7a11e5);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (int i = 0; i < kRandomTriples; ++i) {
      if (!associative(pick(rng), pick(rng), pick(rng))) {
        fail(ErrorCode::parse_error, "table is not associative");
      }
    }
  }

  group->finish();
  return group;
}

std::shared_ptr<const FiniteGroup> enumerate_group(const std::vector<Permutation>& generators,
                                                   std::size_t cap) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  std::vector<Permutation> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.extended(degree));

  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  auto& elements = group->permutations_;
  auto& lookup = group->lookup_;
  elements.push_back(Permutation::identity(degree));
  lookup.emplace(elements.back(), 0);

  // right[x * gens + j] = x * gens[j]; parent links rebuild the full table.
  std::vector<ElementId> right;
  std::vector<ElementId> parent{0};
  std::vector<std::size_t> parent_gen{0};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Permutation product = elements[i] * gens[j];
      auto it = lookup.find(product);
      if (it == lookup.end()) {
        if (elements.size() >= cap) {
          fail(ErrorCode::too_large, "group order exceeds the cap of " + std::to_string(cap));
        }
        const auto id = static_cast<ElementId>(elements.size());
        it = lookup.emplace(product, id).first;
        elements.push_back(std::move(product));
        parent.push_back(static_cast<ElementId>(i));
        parent_gen.push_back(j);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  const std::size_t k = gens.size();
  group->order_ = n;
  group->degree_ = degree;
  group->table_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) group->table_[x * n] = static_cast<ElementId>(x);
  for (std::size_t y = 1; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto xp = group->table_[x * n + parent[y]];
      group->table_[x * n + y] = right[xp * k + parent_gen[y]];
    }
  }
  group->inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    group->inverse_[x] = lookup.at(elements[x].inverse());
  }
  group->finish();
  return group;
}

void FiniteGroup::finish() {
  const std::size_t n = order_;
  element_order_.assign(n, 0);
  exponent_ = 1;
  for (ElementId x = 0; x < n; ++x) {
    std::size_t k = 1;
    for (ElementId y = x; y != kIdentity; y = mul(y, x)) ++k;
    element_order_[x] = k;
    exponent_ = std::lcm(exponent_, static_cast<Integer>(k));
  }

  class_index_.assign(n, static_cast<std::size_t>(-1));
  classes_.clear();
  for (ElementId x = 0; x < n; ++x) {
    if (class_index_[x] != static_cast<std::size_t>(-1)) continue;
    ConjClass cls;
    cls.group = this;
    cls.index = classes_.size();
    for (ElementId g = 0; g < n; ++g) {
      const auto y = conjugate(g, x);
      if (class_index_[y] == static_cast<std::size_t>(-1)) {
        class_index_[y] = cls.index;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

ElementId FiniteGroup::multiply(ElementId x, ElementId y) const {
  if (!contains(x) || !contains(y)) {
    fail(ErrorCode::invalid_letter, "element id out of range for a group of order " +
                                        std::to_string(order_));
  }
  return mul(x, y);
}

ElementId FiniteGroup::inverse(ElementId x) const {
  if (!contains(x)) {
    fail(ErrorCode::invalid_letter, "element id " + std::to_string(x) +
                                        " out of range for a group of order " +
                                        std::to_string(order_));
  }
  return inv(x);
}

std::string FiniteGroup::element_name(ElementId x) const {
  if (is_permutation_group()) return permutation(x).to_cycle_string();
  return BaseGroup::element_name(x);
}

ElementId FiniteGroup::power(ElementId x, Integer e) const {
  const auto n = static_cast<Integer>(element_order(x));
  Integer remaining = mod_floor(e, n);
  ElementId result = kIdentity;
  while (remaining-- > 0) result = mul(result, x);
  return result;
}

std::size_t FiniteGroup::class_power(std::size_t class_idx, Integer s) const {
  return class_index(power(classes_.at(class_idx).representative(), s));
}

std::vector<std::size_t> FiniteGroup::torsion_classes(Integer n) const {
  std::vector<std::size_t> out;
  for (const auto& cls : classes_) {
    const auto rep = cls.representative();
    if (rep != kIdentity && n % static_cast<Integer>(element_order(rep)) == 0) {
      out.push_back(cls.index);
    }
  }
  return out;
}

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  if (!is_permutation_group() || p.degree() > degree_) return std::nullopt;
  const auto it = lookup_.find(p.extended(degree_));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementId> generating_set(const FiniteGroup& group) {
  std::vector<ElementId> gens;
  std::vector<bool> covered(group.order(), false);
  covered[BaseGroup::kIdentity] = true;
  for (ElementId x = 1; x < group.order(); ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (const auto y : closure(group, gens)) covered[y] = true;
  }
  return gens;
}

std::vector<std::vector<ElementId>> automorphisms(const FiniteGroup& group) {
  const auto gens = generating_set(group);
  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (ElementId y = 0; y < group.order(); ++y) {
      if (group.element_order(y) == group.element_order(gens[i])) candidates[i].push_back(y);
    }
  }

  std::vector<std::vector<ElementId>> out;
  std::vector<ElementId> images(gens.size());
  std::vector<std::size_t> cursor(gens.size(), 0);
  // Odometer over the candidate images of each generator.
  for (;;) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][cursor[i]];
    auto phi = extend_to_automorphism(group, gens, images);
    if (!phi.empty()) out.push_back(std::move(phi));
    std::size_t i = 0;
    while (i < gens.size() && ++cursor[i] == candidates[i].size()) cursor[i++] = 0;
    if (i == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace triangle_words
