#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triangle_words {

/// Failure categories raised by the library. Each operation documents the
/// codes it can produce; callers such as the CLI map them onto exit codes.
enum class ErrorCode {
  invalid_modulus,
  star_undefined,
  not_coprime,
  invalid_segment,
  invalid_signature,
  invalid_fiber,
  invalid_r,
  invalid_s,
  invalid_letter,
  invalid_word,
  mixed_base,
  invalid_automorphism,
  invalid_order,
  invalid_case,
  too_large,
  parse_error,
  not_finite,
  invalid_angle,
  not_elliptic,
  inconclusive,
  internal_inconsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

  /// True for codes that signal a broken internal invariant rather than bad
  /// input.
  bool is_internal() const noexcept {
    return code_ == ErrorCode::internal_inconsistency;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace triangle_words
