#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace triangle_words {

/// A permutation of {0, ..., n-1}. Text forms (cycle notation, image lists)
/// are 1-based.
///
/// Products compose like functions: (x * y)(i) = x(y(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Zero-based images; throws parse_error unless they form a permutation.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// One-line notation with 1-based images, e.g. {2, 1, 3} for (1 2).
  static Permutation from_one_based(const std::vector<std::int64_t>& images);
  /// Cycle notation such as "(1 2)(3 4)" or "()" on `degree` points. Points
  /// beyond the largest mentioned one are fixed; `degree` may be 0 to infer
  /// it from the largest point.
  static Permutation from_cycles(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Same permutation on a larger point set.
  Permutation extended(std::size_t degree) const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// 1-based cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace triangle_words
