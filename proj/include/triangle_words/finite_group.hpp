#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "triangle_words/permutation.hpp"
#include "triangle_words/residue.hpp"

namespace triangle_words {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// Group-order cap: TRIANGLE_WORDS_CAP when set to a positive integer,
/// kDefaultGroupCap otherwise.
std::size_t group_cap_from_env();

/// Minimal group interface used by the word machinery. Elements are integer
/// ids and id 0 is the identity.
class BaseGroup {
 public:
  static constexpr ElementId kIdentity = 0;

  virtual ~BaseGroup() = default;

  virtual bool contains(ElementId x) const = 0;
  virtual ElementId multiply(ElementId x, ElementId y) const = 0;
  virtual ElementId inverse(ElementId x) const = 0;
  /// Human-readable label for an element.
  virtual std::string element_name(ElementId x) const { return "g" + std::to_string(x); }
};

class FiniteGroup;

/// The group generated by `generators`, found by breadth-first closure. Ids
/// follow discovery order with 0 the identity. Generators of smaller degree
/// are extended by fixed points. Throws too_large once the closure exceeds
/// `cap` elements.
std::shared_ptr<const FiniteGroup> enumerate_group(const std::vector<Permutation>& generators,
                                                   std::size_t cap = kDefaultGroupCap);

/// A conjugacy class: sorted member ids, least id as representative.
struct ConjClass {
  const FiniteGroup* group = nullptr;
  std::size_t index = 0;
  std::vector<ElementId> members;

  ElementId representative() const { return members.front(); }
  std::size_t size() const noexcept { return members.size(); }
};

/// A finite group stored as a full multiplication table.
///
/// Instances are immutable and only handed out through shared_ptr, since
/// conjugacy classes point back at their group.
class FiniteGroup final : public BaseGroup {
 public:
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  /// Builds a group from a row-major table, table[x][y] = x*y, with 0 the
  /// identity. Identity, inverse and Latin-square properties are checked
  /// exhaustively; associativity exhaustively up to order 100 and on random
  /// triples beyond. Throws parse_error on failure.
  static std::shared_ptr<const FiniteGroup> from_table(
      const std::vector<std::vector<std::int64_t>>& table);

  std::size_t order() const noexcept { return order_; }

  bool contains(ElementId x) const override { return x < order_; }
  ElementId multiply(ElementId x, ElementId y) const override;
  ElementId inverse(ElementId x) const override;
  std::string element_name(ElementId x) const override;

  /// Unchecked table lookups for inner loops.
  ElementId mul(ElementId x, ElementId y) const noexcept { return table_[x * order_ + y]; }
  ElementId inv(ElementId x) const noexcept { return inverse_[x]; }

  /// x^e for any integer e.
  ElementId power(ElementId x, Integer e) const;
  /// g x g^-1.
  ElementId conjugate(ElementId g, ElementId x) const noexcept { return mul(mul(g, x), inv(g)); }
  /// x y x^-1 y^-1.
  ElementId commutator(ElementId x, ElementId y) const noexcept {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }

  std::size_t element_order(ElementId x) const { return element_order_.at(x); }
  /// Least common multiple of the element orders.
  Integer exponent() const noexcept { return exponent_; }

  const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  std::size_t class_index(ElementId x) const { return class_index_.at(x); }
  /// Index of the class {c^s : c in C}.
  std::size_t class_power(std::size_t class_idx, Integer s) const;
  /// Classes of non-identity elements whose order divides n.
  std::vector<std::size_t> torsion_classes(Integer n) const;

  bool is_permutation_group() const noexcept { return !permutations_.empty(); }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& permutation(ElementId x) const { return permutations_.at(x); }
  /// Id of a permutation of this group's degree, if it belongs to the group.
  std::optional<ElementId> find(const Permutation& p) const;

  friend std::shared_ptr<const FiniteGroup> enumerate_group(
      const std::vector<Permutation>& generators, std::size_t cap);

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::size_t> element_order_;
  Integer exponent_ = 1;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_index_;

  std::size_t degree_ = 0;
  std::vector<Permutation> permutations_;
  std::unordered_map<Permutation, ElementId, PermutationHash> lookup_;
};

/// Every automorphism of `group`, each as the image list phi[x]. The identity
/// map comes first.
std::vector<std::vector<ElementId>> automorphisms(const FiniteGroup& group);

/// A small generating set chosen greedily by increasing id.
std::vector<ElementId> generating_set(const FiniteGroup& group);

}  // namespace triangle_words
