#include "triangle_words/residue.hpp"

#include <numeric>
#include <optional>

#include "triangle_words/error.hpp"
#include "wide_int.hpp"

namespace triangle_words {

namespace {

Integer checked_mul(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(ErrorCode::invalid_r, "integer overflow in coprime lift");
  }
  return out;
}

Integer checked_add(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(ErrorCode::invalid_r, "integer overflow in coprime lift");
  }
  return out;
}

}  // namespace

Integer mod_floor(Integer value, Integer modulus) noexcept {
  Integer r = value % modulus;
  return r < 0 ? r + modulus : r;
}

UnitResidue::UnitResidue(Integer value, Integer modulus) : modulus_(modulus), value_(0) {
  if (modulus < 2) {
    fail(ErrorCode::invalid_modulus,
         "modulus must be at least 2, got " + std::to_string(modulus));
  }
  value_ = mod_floor(value, modulus);
  if (std::gcd(value_, modulus_) != 1) {
    fail(ErrorCode::not_coprime, std::to_string(value) + " is not a unit modulo " +
                                     std::to_string(modulus));
  }
}

UnitResidue UnitResidue::negated() const { return UnitResidue(modulus_ - value_, modulus_); }

UnitResidue UnitResidue::inverse() const {
  // Extended Euclid on (value, modulus).
  Integer old_r = value_, r = modulus_;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return UnitResidue(old_s, modulus_);
}

UnitResidue operator*(const UnitResidue& lhs, const UnitResidue& rhs) {
  if (lhs.modulus_ != rhs.modulus_) {
    fail(ErrorCode::invalid_modulus, "cannot multiply residues with moduli " +
                                         std::to_string(lhs.modulus_) + " and " +
                                         std::to_string(rhs.modulus_));
  }
  const auto product =
      static_cast<WideInt>(lhs.value_) * static_cast<WideInt>(rhs.value_);
  return UnitResidue(static_cast<Integer>(product % lhs.modulus_), lhs.modulus_);
}

std::string UnitResidue::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

std::vector<UnitResidue> unit_group(Integer n) {
  if (n < 2) {
    fail(ErrorCode::invalid_modulus, "modulus must be at least 2, got " + std::to_string(n));
  }
  std::vector<UnitResidue> units;
  for (Integer v = 1; v < n; ++v) {
    if (std::gcd(v, n) == 1) units.emplace_back(v, n);
  }
  return units;
}

UnitResidue crt_star(Integer k, Integer m, const UnitResidue& r) {
  if (k < 2 || m < 2) {
    fail(ErrorCode::invalid_modulus, "k and m must be at least 2");
  }
  if (std::gcd(k, m) > 2) {
    fail(ErrorCode::star_undefined, "gcd(" + std::to_string(k) + ", " + std::to_string(m) +
                                        ") > 2, so r* does not exist");
  }
  const Integer modulus = std::lcm(k, m);
  if (r.modulus() != modulus) {
    fail(ErrorCode::invalid_r, "r must be taken modulo lcm(k, m) = " + std::to_string(modulus));
  }
  std::optional<Integer> found;
  for (Integer x = 1; x <= modulus; ++x) {
    if (mod_floor(x - r.value(), k) == 0 && mod_floor(x + r.value(), m) == 0) {
      if (found) {
        fail(ErrorCode::internal_inconsistency, "r* is not unique");
      }
      found = x;
    }
  }
  if (!found) {
    fail(ErrorCode::internal_inconsistency, "no r* found although gcd(k, m) <= 2");
  }
  return UnitResidue(*found, modulus);
}

Integer lift_coprime(Integer r, Integer n, const std::vector<Integer>& primes) {
  if (n < 1) {
    fail(ErrorCode::invalid_modulus, "n must be positive, got " + std::to_string(n));
  }
  if (std::gcd(r, n) != 1) {
    fail(ErrorCode::not_coprime,
         "gcd(" + std::to_string(r) + ", " + std::to_string(n) + ") != 1");
  }
  Integer q = 1;         // primes not dividing r
  Integer q_divides = 1;  // primes dividing r
  for (const Integer p : primes) {
    if (r % p != 0) {
      q = checked_mul(q, p);
    } else {
      q_divides = checked_mul(q_divides, p);
    }
  }
  const Integer step = checked_mul(n, q);
  Integer lifted = checked_add(r, step);
  if (lifted > 0) return lifted;

  // r + n*q*t with t = 1 + j*q_divides; t stays prime to every p in S.
  const Integer stride = checked_mul(step, q_divides);
  const Integer deficit = 1 - lifted;  // > 0
  const Integer j = (deficit + stride - 1) / stride;
  lifted = checked_add(lifted, checked_mul(j, stride));
  return lifted;
}

bool segment_perm_check(Integer m, const UnitResidue& r, Integer c) {
  if (m < 3 || c < 1 || c > m - 2) {
    fail(ErrorCode::invalid_segment, "need m >= 3 and 1 <= c <= m - 2, got m = " +
                                         std::to_string(m) + ", c = " + std::to_string(c));
  }
  if (r.modulus() != m) {
    fail(ErrorCode::invalid_r, "r must be a residue modulo " + std::to_string(m));
  }
  // Both sides have c distinct members (r is a unit), so inclusion suffices.
  std::vector<bool> in_segment(static_cast<std::size_t>(m), false);
  for (Integer i = 1; i <= c; ++i) in_segment[static_cast<std::size_t>(i)] = true;
  for (Integer i = 1; i <= c; ++i) {
    if (!in_segment[static_cast<std::size_t>((i * r.value()) % m)]) return false;
  }
  return true;
}

}  // namespace triangle_words
