#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "triangle_words/finite_group.hpp"

namespace triangle_words {

/// A letter from the base group G.
struct BaseLetter {
  ElementId id;
  friend bool operator==(const BaseLetter&, const BaseLetter&) = default;
};

/// b or b^-1; `exponent` is +1 or -1.
struct BLetter {
  int exponent;
  friend bool operator==(const BLetter&, const BLetter&) = default;
};

using Letter = std::variant<BaseLetter, BLetter>;

/// An element of G * <b> in normal form (u0, b^e1, u2, ..., b^es, u2s).
///
/// The base letters u0, u2, ... are stored separately from the signs
/// e1, e2, ...; the flanking letters u0 and u2s are always present and may be
/// the identity. No inner base letter u2i (0 < i < s) may be the identity
/// with e_i = -e_{i+1}.
class ReducedWord {
 public:
  /// Throws invalid_word for bad shape or a cancellable inner position and
  /// invalid_letter for out-of-range ids or exponents other than +-1.
  ReducedWord(std::shared_ptr<const BaseGroup> base, std::vector<ElementId> base_letters,
              std::vector<int> signs);

  static ReducedWord identity(std::shared_ptr<const BaseGroup> base);
  static ReducedWord element(std::shared_ptr<const BaseGroup> base, ElementId x);

  const BaseGroup& base() const noexcept { return *base_; }
  const std::shared_ptr<const BaseGroup>& base_ptr() const noexcept { return base_; }

  /// Number of b-letters.
  std::size_t length() const noexcept { return signs_.size(); }
  bool is_identity() const noexcept {
    return signs_.empty() && base_letters_.front() == BaseGroup::kIdentity;
  }

  /// u0, u2, ..., u2s.
  const std::vector<ElementId>& base_letters() const noexcept { return base_letters_; }
  /// e1, ..., es.
  const std::vector<int>& signs() const noexcept { return signs_; }
  /// The full alternating sequence (u0, ..., u2s).
  std::vector<Letter> letters() const;

  /// Equal when over the same base object with the same letters.
  friend bool operator==(const ReducedWord& lhs, const ReducedWord& rhs) noexcept;

 private:
  std::shared_ptr<const BaseGroup> base_;
  std::vector<ElementId> base_letters_;
  std::vector<int> signs_;
};

/// Index i (0 < i < s) of the first inner base letter that breaks reducedness,
/// or 0 when the letters are reduced.
std::size_t first_cancellable(const std::vector<ElementId>& base_letters,
                              const std::vector<int>& signs);

/// The reduced word of an arbitrary letter sequence, computed by letting the
/// letters act right to left on the identity word: a base letter g multiplies
/// u0 on the left, b^e either strips a leading (1, b^-e) or prepends (1, b^e).
/// Throws invalid_letter for out-of-range ids or bad exponents.
ReducedWord normalize(const std::vector<Letter>& letters, std::shared_ptr<const BaseGroup> base);

struct WordProduct {
  ReducedWord word;
  std::size_t cancelled;  // b-letter pairs removed at the junction
};

/// u * v with the number n of cancelled pairs; length = len(u) + len(v) - 2n.
/// Throws mixed_base when the words use different base objects.
WordProduct multiply(const ReducedWord& u, const ReducedWord& v);

/// Reversed word with every letter inverted.
ReducedWord invert(const ReducedWord& u);

/// Whitespace-separated tokens `g:<id>`, `b`, `b-`. Throws parse_error.
std::vector<Letter> parse_letters(std::string_view text);

/// Token form of a word with flanking base letters always printed, e.g.
/// "g:0 b g:3 b- g:0".
std::string format_word(const ReducedWord& word);

/// Same shape with base letters spelled by BaseGroup::element_name.
std::string describe_word(const ReducedWord& word);

}  // namespace triangle_words
