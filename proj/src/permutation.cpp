#include "triangle_words/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "triangle_words/error.hpp"

namespace triangle_words {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      fail(ErrorCode::parse_error, "image list is not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<std::int64_t>& images) {
  std::vector<std::uint32_t> zero_based;
  zero_based.reserve(images.size());
  for (const auto v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size()) {
      fail(ErrorCode::parse_error, "image " + std::to_string(v) + " out of range 1.." +
                                       std::to_string(images.size()));
    }
    zero_based.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t largest = 0;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorCode::parse_error, "expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) fail(ErrorCode::parse_error, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        fail(ErrorCode::parse_error, "unexpected character in cycle notation");
      }
      std::size_t point = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + static_cast<std::size_t>(text[i] - '0');
        if (point > 1'000'000) fail(ErrorCode::parse_error, "point too large");
        ++i;
      }
      if (point == 0) fail(ErrorCode::parse_error, "points are numbered from 1");
      largest = std::max(largest, point);
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  if (degree == 0) degree = largest;
  if (largest > degree) {
    fail(ErrorCode::parse_error, "cycle mentions point " + std::to_string(largest) +
                                     " beyond degree " + std::to_string(degree));
  }
  // Cycles compose right to left, matching operator*.
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<std::uint32_t> images = identity(degree).images();
    std::vector<bool> used(degree, false);
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (used[cycle[j]]) fail(ErrorCode::parse_error, "repeated point inside a cycle");
      used[cycle[j]] = true;
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    }
    result = result * Permutation(std::move(images));
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) fail(ErrorCode::parse_error, "cannot shrink a permutation");
  Permutation p = identity(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) {
    fail(ErrorCode::parse_error, "permutations of different degree");
  }
  Permutation p;
  p.images_.resize(lhs.degree());
  for (std::size_t i = 0; i < lhs.degree(); ++i) p.images_[i] = lhs.images_[rhs.images_[i]];
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t j = start;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace triangle_words
