#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace triangle_words {

using Integer = std::int64_t;

/// Nonnegative remainder of `value` modulo `modulus` (modulus > 0).
Integer mod_floor(Integer value, Integer modulus) noexcept;

/// A unit of Z/nZ, stored as its least positive representative.
///
/// Construction normalizes any integer representative, so two residues
/// compare equal exactly when they denote the same class.
class UnitResidue {
 public:
  /// Throws invalid_modulus for modulus < 2 and not_coprime when
  /// gcd(value, modulus) != 1.
  UnitResidue(Integer value, Integer modulus);

  Integer value() const noexcept { return value_; }
  Integer modulus() const noexcept { return modulus_; }

  bool is_one() const noexcept { return value_ == 1; }
  bool is_minus_one() const noexcept { return value_ == modulus_ - 1; }
  bool is_plus_minus_one() const noexcept { return is_one() || is_minus_one(); }

  UnitResidue negated() const;
  UnitResidue inverse() const;

  /// Reduction to a divisor of the modulus; `divisor` must divide modulus().
  Integer reduce(Integer divisor) const noexcept { return value_ % divisor; }

  friend UnitResidue operator*(const UnitResidue& lhs, const UnitResidue& rhs);
  friend bool operator==(const UnitResidue&, const UnitResidue&) = default;
  friend auto operator<=>(const UnitResidue&, const UnitResidue&) = default;

  std::string to_string() const;

 private:
  // Field order matters for <=>: compare by modulus, then value.
  Integer modulus_;
  Integer value_;
};

/// All units of Z/nZ in increasing order of representative.
/// Throws invalid_modulus for n < 2.
std::vector<UnitResidue> unit_group(Integer n);

/// The unit r* with r* = r (mod k) and r* = -r (mod m), defined when
/// gcd(k, m) <= 2. Found by scanning [1, lcm(k, m)]; the scan also checks that
/// exactly one solution exists.
///
/// Throws star_undefined when gcd(k, m) > 2, invalid_modulus for k or m < 2,
/// and invalid_r when r is not a residue modulo lcm(k, m).
UnitResidue crt_star(Integer k, Integer m, const UnitResidue& r);

/// A positive integer r' = r (mod n) divisible by no prime in `primes`.
///
/// For r > 0 this is r + n*q with q the product of the primes not dividing r.
/// For r <= 0 the multiplier q is scaled by the least t = 1 + j*Q' (Q' the
/// product of the primes dividing r) that makes the result positive; t is then
/// prime to every member of S, so divisibility is unchanged.
///
/// Members of `primes` are assumed to be distinct primes. Throws not_coprime
/// when gcd(r, n) != 1, invalid_modulus for n < 1, and invalid_r on overflow.
Integer lift_coprime(Integer r, Integer n, const std::vector<Integer>& primes);

/// Whether {1, ..., c} and {r, 2r, ..., cr} agree as residue sets mod m.
/// Requires m >= 3 and 1 <= c <= m - 2 (invalid_segment otherwise); r must be
/// a residue modulo m (invalid_r otherwise).
bool segment_perm_check(Integer m, const UnitResidue& r, Integer c);

}  // namespace triangle_words
