#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "triangle_words/classify.hpp"
#include "triangle_words/lattice.hpp"
#include "test_support.hpp"

namespace tw = triangle_words;
using tw::Integer;
using tw::UnitResidue;
using tw::VerdictReason;
using tw::testing::code_of;

TEST(ClassifyBurnside, Examples) {
  const auto a = tw::classify_burnside(2, 3, 7, 5);
  EXPECT_FALSE(a.universal);
  EXPECT_EQ(a.reason, VerdictReason::none);

  const auto b = tw::classify_burnside(2, 3, 5, 7);
  EXPECT_TRUE(b.universal);
  EXPECT_EQ(b.reason, VerdictReason::sum_at_least_one);

  const auto c = tw::classify_burnside(5, 5, 5, 1);
  EXPECT_TRUE(c.universal);
  EXPECT_EQ(c.reason, VerdictReason::r_is_pm1);

  EXPECT_EQ(tw::classify_burnside(2, 3, 7, 41).reason, VerdictReason::r_is_pm1);
  EXPECT_EQ(tw::classify_burnside(2, 3, 7, -1).reason, VerdictReason::r_is_pm1);
  // Euclidean triples sit on the boundary and count as sum >= 1.
  EXPECT_EQ(tw::classify_burnside(3, 3, 3, 2).reason, VerdictReason::sum_at_least_one);
  EXPECT_EQ(tw::classify_burnside(2, 4, 4, 1).reason, VerdictReason::sum_at_least_one);
}

TEST(ClassifyBurnside, Errors) {
  EXPECT_EQ(code_of([] { tw::classify_burnside(2, 3, 7, 6); }), tw::ErrorCode::invalid_r);
  EXPECT_EQ(code_of([] { tw::classify_burnside(1, 3, 7, 5); }), tw::ErrorCode::invalid_signature);
  EXPECT_EQ(code_of([] { tw::classify_burnside(2, 3, 7, UnitResidue(1, 5)); }),
            tw::ErrorCode::invalid_r);
}

TEST(ClassifyHonda, Examples) {
  const auto a = tw::classify_honda(3, 4, 5);
  EXPECT_TRUE(a.universal);
  EXPECT_EQ(a.reason, VerdictReason::rstar_is_pm1);

  for (const auto& r : tw::unit_group(6)) {
    const auto v = tw::classify_honda(2, 3, r);
    EXPECT_TRUE(v.universal);
    EXPECT_EQ(v.reason, VerdictReason::sum_at_least_one);
  }

  const auto c = tw::classify_honda(4, 4, 3);
  EXPECT_TRUE(c.universal);
  EXPECT_EQ(c.reason, VerdictReason::r_is_pm1);

  const auto d = tw::classify_honda(5, 7, 2);
  EXPECT_FALSE(d.universal);
  EXPECT_EQ(d.reason, VerdictReason::none);
}

TEST(ClassifyHonda, ErrorsAndRstarOnlyForSmallGcd) {
  EXPECT_EQ(code_of([] { tw::classify_honda(3, 4, 2); }), tw::ErrorCode::invalid_r);
  EXPECT_EQ(code_of([] { tw::classify_honda(3, 1, 2); }), tw::ErrorCode::invalid_signature);
  for (Integer k = 2; k <= 20; ++k)
    for (Integer m = 2; m <= 20; ++m)
      for (const auto& r : tw::unit_group(std::lcm(k, m))) {
        const auto v = tw::classify_honda(k, m, r);
        EXPECT_EQ(v.universal, v.reason != VerdictReason::none);
        if (v.reason == VerdictReason::rstar_is_pm1) EXPECT_LE(std::gcd(k, m), 2);
      }
}

TEST(ClassifyHondaViaBurnside, Examples) {
  EXPECT_TRUE(tw::classify_honda_via_burnside(3, 4, 5).universal);
  EXPECT_FALSE(tw::classify_honda_via_burnside(5, 7, 2).universal);
  for (Integer m = 2; m <= 12; ++m) EXPECT_TRUE(tw::classify_honda_via_burnside(2, m, 1).universal);
}

TEST(ClassifyHondaViaBurnside, AgreesWithClosedForm) {
  for (Integer k = 2; k <= 50; ++k)
    for (Integer m = 2; m <= 50; ++m)
      for (const auto& r : tw::unit_group(std::lcm(k, m))) {
        ASSERT_EQ(tw::classify_honda(k, m, r).universal,
                  tw::classify_honda_via_burnside(k, m, r).universal)
            << k << "," << m << " r=" << r.value();
      }
}

TEST(ClassifyBurnside, InvariantUnderPermutation) {
  for (Integer k = 2; k <= 8; ++k)
    for (Integer l = 2; l <= 8; ++l)
      for (Integer m = 2; m <= 8; ++m) {
        const Integer n = std::lcm(std::lcm(k, l), m);
        std::array<Integer, 3> sig{k, l, m};
        for (const auto& r : tw::unit_group(n)) {
          const bool expected = tw::classify_burnside(k, l, m, r).universal;
          std::sort(sig.begin(), sig.end());
          do {
            EXPECT_EQ(tw::classify_burnside(sig[0], sig[1], sig[2], r).universal, expected);
          } while (std::next_permutation(sig.begin(), sig.end()));
        }
      }
}

TEST(ClassifyBurnside, UniversalSetIsSubgroupWithMinusOne) {
  for (Integer k = 2; k <= 9; ++k)
    for (Integer l = k; l <= 9; ++l)
      for (Integer m = l; m <= 12; ++m) {
        const Integer n = std::lcm(std::lcm(k, l), m);
        std::vector<UnitResidue> set;
        for (const auto& r : tw::unit_group(n))
          if (tw::classify_burnside(k, l, m, r).universal) set.push_back(r);
        ASSERT_TRUE(std::binary_search(set.begin(), set.end(), UnitResidue(-1, n)));
        for (const auto& x : set)
          for (const auto& y : set) EXPECT_TRUE(std::binary_search(set.begin(), set.end(), x * y));
      }
}

TEST(ClassifyBurnside, MatchesLatticeMultiplierSet) {
  for (Integer k = 2; k <= 10; ++k)
    for (Integer l = 2; l <= 10; ++l)
      for (Integer m = 2; m <= 10; ++m) {
        const auto set = tw::multiplier_set({k, l, m});
        for (const auto& r : tw::unit_group(std::lcm(std::lcm(k, l), m))) {
          ASSERT_EQ(tw::classify_burnside(k, l, m, r).universal,
                    std::binary_search(set.begin(), set.end(), r))
              << k << "," << l << "," << m << " r=" << r.value();
        }
      }
}
