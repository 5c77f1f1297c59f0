#include "triangle_words/classify.hpp"

#include <numeric>

#include "triangle_words/error.hpp"
#include "triangle_words/lattice.hpp"

namespace triangle_words {

namespace {

UnitResidue unit_or_invalid_r(Integer r, Integer modulus) {
  try {
    return UnitResidue(r, modulus);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::not_coprime) {
      fail(ErrorCode::invalid_r, std::to_string(r) + " is not a unit modulo " +
                                     std::to_string(modulus));
    }
    throw;
  }
}

void require_modulus(const UnitResidue& r, Integer modulus) {
  if (r.modulus() != modulus) {
    fail(ErrorCode::invalid_r, "r is taken modulo " + std::to_string(r.modulus()) +
                                   " but the classification needs modulus " +
                                   std::to_string(modulus));
  }
}

void require_exponents(Integer k, Integer m) {
  if (k < 2 || m < 2) {
    fail(ErrorCode::invalid_signature, "k and m must be at least 2");
  }
}

}  // namespace

std::string_view to_string(VerdictReason reason) noexcept {
  switch (reason) {
    case VerdictReason::sum_at_least_one: return "SUM_AT_LEAST_ONE";
    case VerdictReason::r_is_pm1: return "R_IS_PM1";
    case VerdictReason::rstar_is_pm1: return "RSTAR_IS_PM1";
    case VerdictReason::none: return "NONE";
  }
  return "NONE";
}

BurnsideVerdict classify_burnside(Integer k, Integer l, Integer m, const UnitResidue& r) {
  const TriangleSignature signature(k, l, m);
  require_modulus(r, signature.lcm());
  if (signature.curvature_sign() >= 0) return {true, VerdictReason::sum_at_least_one};
  if (r.is_plus_minus_one()) return {true, VerdictReason::r_is_pm1};
  return {false, VerdictReason::none};
}

BurnsideVerdict classify_burnside(Integer k, Integer l, Integer m, Integer r) {
  const TriangleSignature signature(k, l, m);
  return classify_burnside(k, l, m, unit_or_invalid_r(r, signature.lcm()));
}

HondaVerdict classify_honda(Integer k, Integer m, const UnitResidue& r) {
  require_exponents(k, m);
  require_modulus(r, std::lcm(k, m));
  if (2 * m + k >= k * m) return {true, VerdictReason::sum_at_least_one};
  if (r.is_plus_minus_one()) return {true, VerdictReason::r_is_pm1};
  if (std::gcd(k, m) <= 2 && crt_star(k, m, r).is_plus_minus_one()) {
    return {true, VerdictReason::rstar_is_pm1};
  }
  return {false, VerdictReason::none};
}

HondaVerdict classify_honda(Integer k, Integer m, Integer r) {
  require_exponents(k, m);
  return classify_honda(k, m, unit_or_invalid_r(r, std::lcm(k, m)));
}

HondaVerdict classify_honda_via_burnside(Integer k, Integer m, const UnitResidue& r) {
  require_exponents(k, m);
  require_modulus(r, std::lcm(k, m));
  const auto direct = classify_burnside(k, k, m, r);
  if (direct.universal) return {true, direct.reason};
  if (std::gcd(k, m) <= 2 && classify_burnside(k, k, m, crt_star(k, m, r)).universal) {
    return {true, VerdictReason::rstar_is_pm1};
  }
  return {false, VerdictReason::none};
}

HondaVerdict classify_honda_via_burnside(Integer k, Integer m, Integer r) {
  require_exponents(k, m);
  return classify_honda_via_burnside(k, m, unit_or_invalid_r(r, std::lcm(k, m)));
}

}  // namespace triangle_words
