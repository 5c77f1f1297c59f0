#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "triangle_words/finite_group.hpp"

namespace triangle_words {

/// Parses a group description in JSON syntax. Two shapes are accepted:
///
///   {"permutations": [[2,1,3], "(1 2 3)"], "degree": 3}
///   {"table": [[0,1],[1,0]]}
///
/// Permutations are 1-based image lists of length `degree` or cycle strings.
/// `degree` may be omitted when image lists fix it. Throws parse_error on
/// malformed input and too_large past `cap`.
std::shared_ptr<const FiniteGroup> parse_group_json(const std::string& text,
                                                    std::size_t cap = kDefaultGroupCap);

/// Reads and parses a group file.
std::shared_ptr<const FiniteGroup> load_group_file(const std::string& path,
                                                   std::size_t cap = kDefaultGroupCap);

}  // namespace triangle_words
