#include "triangle_words/error.hpp"

namespace triangle_words {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_modulus: return "invalid-modulus";
    case ErrorCode::star_undefined: return "star-undefined";
    case ErrorCode::not_coprime: return "not-coprime";
    case ErrorCode::invalid_segment: return "invalid-segment";
    case ErrorCode::invalid_signature: return "invalid-signature";
    case ErrorCode::invalid_fiber: return "invalid-fiber";
    case ErrorCode::invalid_r: return "invalid-r";
    case ErrorCode::invalid_s: return "invalid-s";
    case ErrorCode::invalid_letter: return "invalid-letter";
    case ErrorCode::invalid_word: return "invalid-word";
    case ErrorCode::mixed_base: return "mixed-base";
    case ErrorCode::invalid_automorphism: return "invalid-automorphism";
    case ErrorCode::invalid_order: return "invalid-order";
    case ErrorCode::invalid_case: return "invalid-case";
    case ErrorCode::too_large: return "too-large";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::not_finite: return "not-finite";
    case ErrorCode::invalid_angle: return "invalid-angle";
    case ErrorCode::not_elliptic: return "not-elliptic";
    case ErrorCode::inconclusive: return "inconclusive";
    case ErrorCode::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace triangle_words
