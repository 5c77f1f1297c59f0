#pragma once

#include <gtest/gtest.h>

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "triangle_words/error.hpp"
#include "triangle_words/finite_group.hpp"
#include "triangle_words/group_io.hpp"
#include "triangle_words/words.hpp"

namespace triangle_words::testing {

/// Code of the Error thrown by f; records a failure when nothing is thrown.
template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::internal_inconsistency;
}

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"s3", "d4", "q8", "a4", "d5", "s4", "a5"};
  return names;
}

inline std::string group_path(const std::string& name) {
  return std::string(TRIANGLE_WORDS_DATA_DIR) + "/groups/" + name + ".json";
}

inline std::shared_ptr<const FiniteGroup> load_corpus(const std::string& name) {
  return load_group_file(group_path(name));
}

/// Cyclic group Z/n as an explicit table.
inline std::shared_ptr<const FiniteGroup> cyclic_group(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> table(n, std::vector<std::int64_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup::from_table(table);
}

struct NaiveWord {
  std::vector<ElementId> bases;
  std::vector<int> signs;
  bool operator==(const NaiveWord&) const = default;
};

/// Normal form by rewriting to a fixpoint: merge adjacent base letters, drop
/// identity base letters, delete adjacent b^e b^-e. The survivors are then
/// padded with identities between consecutive b-letters and at both ends.
inline NaiveWord naive_reduce(std::vector<Letter> letters, const FiniteGroup& group) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const auto* x = std::get_if<BaseLetter>(&letters[i]);
      if (x != nullptr && x->id == BaseGroup::kIdentity) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (i + 1 == letters.size()) break;
      const auto* y = std::get_if<BaseLetter>(&letters[i + 1]);
      if (x != nullptr && y != nullptr) {
        letters[i] = BaseLetter{group.mul(x->id, y->id)};
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i + 1));
        changed = true;
        break;
      }
      const auto* p = std::get_if<BLetter>(&letters[i]);
      const auto* q = std::get_if<BLetter>(&letters[i + 1]);
      if (p != nullptr && q != nullptr && p->exponent == -q->exponent) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                      letters.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
  }
  NaiveWord out;
  out.bases.push_back(BaseGroup::kIdentity);
  for (const auto& letter : letters) {
    if (const auto* x = std::get_if<BaseLetter>(&letter)) {
      out.bases.back() = x->id;
    } else {
      out.signs.push_back(std::get<BLetter>(letter).exponent);
      out.bases.push_back(BaseGroup::kIdentity);
    }
  }
  return out;
}

inline std::vector<Letter> random_letters(const FiniteGroup& group, std::size_t max_len,
                                          std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<ElementId> element(0, static_cast<ElementId>(group.order() - 1));
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<Letter> out(len(rng));
  for (auto& letter : out) {
    switch (kind(rng)) {
      case 0: letter = BLetter{1}; break;
      case 1: letter = BLetter{-1}; break;
      default: letter = BaseLetter{element(rng)}; break;
    }
  }
  return out;
}

inline ReducedWord random_word(const std::shared_ptr<const FiniteGroup>& group,
                               std::size_t max_len, std::mt19937_64& rng) {
  return normalize(random_letters(*group, max_len, rng), group);
}

/// Every reduced word of length at most max_len over `group`.
inline std::vector<ReducedWord> all_reduced_words(const std::shared_ptr<const FiniteGroup>& group,
                                                  std::size_t max_len) {
  std::vector<ReducedWord> out;
  const auto n = static_cast<ElementId>(group->order());
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<ElementId> bases(len + 1, 0);
    std::vector<int> signs(len, 1);
    for (;;) {
      if (first_cancellable(bases, signs) == 0) out.emplace_back(group, bases, signs);
      // Odometer over signs, then base letters.
      std::size_t i = 0;
      for (; i < len; ++i) {
        if (signs[i] == 1) {
          signs[i] = -1;
          break;
        }
        signs[i] = 1;
      }
      if (i < len) continue;
      std::size_t j = 0;
      for (; j <= len; ++j) {
        if (++bases[j] < n) break;
        bases[j] = 0;
      }
      if (j > len) break;
    }
  }
  return out;
}

}  // namespace triangle_words::testing
