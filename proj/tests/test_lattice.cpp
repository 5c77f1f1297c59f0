#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "triangle_words/lattice.hpp"
#include "test_support.hpp"

namespace tw = triangle_words;
using tw::Integer;
using tw::LatticePoint;
using tw::RegionTag;
using tw::TriangleSignature;
using tw::testing::code_of;

namespace {

// Reduced fraction p/q, kept separately from the library's klm scaling.
struct Fraction {
  Integer p, q;
};

Fraction add(Fraction x, Fraction y) {
  const Integer q = std::lcm(x.q, y.q);
  const Integer p = x.p * (q / x.q) + y.p * (q / y.q);
  const Integer g = std::gcd(p, q);
  return {p / g, q / g};
}

RegionTag region_oracle(Integer k, Integer l, Integer m, Integer a, Integer b, Integer c) {
  a = tw::mod_floor(a, k);
  b = tw::mod_floor(b, l);
  c = tw::mod_floor(c, m);
  if (a == 0 || b == 0 || c == 0) return RegionTag::none;
  const Fraction s = add(add({a, k}, {b, l}), {c, m});
  if (s.p < s.q) return RegionTag::s;
  if (s.p > 2 * s.q) return RegionTag::neg_s;
  if (s.q == 1) return RegionTag::t;
  return RegionTag::none;
}

std::vector<Integer> values(const std::vector<tw::UnitResidue>& rs) {
  std::vector<Integer> out;
  for (const auto& r : rs) out.push_back(r.value());
  return out;
}

using Triple = std::tuple<Integer, Integer, Integer>;

std::set<Triple> coordinates(const std::vector<LatticePoint>& points) {
  std::set<Triple> out;
  for (const auto& p : points) out.emplace(p.a(), p.b(), p.c());
  return out;
}

}  // namespace

TEST(TriangleSignature, RejectsSmallEntries) {
  EXPECT_EQ(code_of([] { TriangleSignature(1, 3, 7); }), tw::ErrorCode::invalid_signature);
  EXPECT_EQ(TriangleSignature(2, 3, 7).lcm(), 42);
  EXPECT_TRUE(TriangleSignature(2, 3, 5).is_spherical());
  EXPECT_TRUE(TriangleSignature(2, 3, 7).is_hyperbolic());
  EXPECT_EQ(TriangleSignature(2, 3, 6).curvature_sign(), 0);
  EXPECT_EQ(TriangleSignature(3, 3, 3).curvature_sign(), 0);
}

TEST(RegionOf, Examples) {
  EXPECT_EQ(tw::region_of(LatticePoint({2, 3, 7}, 1, 1, 1)), RegionTag::s);
  EXPECT_EQ(tw::region_of(LatticePoint({2, 2, 2}, 1, 1, 1)), RegionTag::none);
  EXPECT_EQ(tw::region_of(LatticePoint({3, 3, 3}, 1, 1, 1)), RegionTag::t);
  EXPECT_EQ(tw::region_of(LatticePoint({3, 3, 3}, 2, 2, 2)), RegionTag::t);
  EXPECT_EQ(tw::region_of(LatticePoint({4, 4, 4}, 3, 3, 3)), RegionTag::neg_s);
  EXPECT_EQ(tw::region_of(LatticePoint({2, 3, 7}, 0, 1, 1)), RegionTag::none);
}

TEST(RegionOf, AgreesWithRationalOracle) {
  for (Integer k = 2; k <= 9; ++k)
    for (Integer l = 2; l <= 9; ++l)
      for (Integer m = 2; m <= 9; ++m) {
        const TriangleSignature sig(k, l, m);
        for (const auto& p : tw::lattice_points(sig)) {
          ASSERT_EQ(tw::region_of(p), region_oracle(k, l, m, p.a(), p.b(), p.c()))
              << sig.to_string() << " " << p.to_string();
        }
      }
}

TEST(LatticePoint, ReducesCoordinates) {
  const LatticePoint p({2, 3, 7}, -1, 4, 15);
  EXPECT_EQ(p.a(), 1);
  EXPECT_EQ(p.b(), 1);
  EXPECT_EQ(p.c(), 1);
  EXPECT_EQ(p.scaled(5), LatticePoint({2, 3, 7}, 5, 5, 5));
}

TEST(LatticePoints, LexicographicOrder) {
  const auto points = tw::lattice_points({2, 3, 4});
  ASSERT_EQ(points.size(), 24u);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto& p = points[i - 1];
    const auto& q = points[i];
    EXPECT_LT(std::make_tuple(p.a(), p.b(), p.c()), std::make_tuple(q.a(), q.b(), q.c()));
  }
}

TEST(MultiplierSet, Examples) {
  EXPECT_EQ(values(tw::multiplier_set({2, 3, 7})), (std::vector<Integer>{1, 41}));
  EXPECT_EQ(values(tw::multiplier_set({2, 3, 5})),
            (std::vector<Integer>{1, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(values(tw::multiplier_set({3, 3, 3})), (std::vector<Integer>{1, 2}));
}

TEST(MultiplierSet, SubgroupContainingMinusOne) {
  for (Integer k = 2; k <= 7; ++k)
    for (Integer l = k; l <= 7; ++l)
      for (Integer m = l; m <= 9; ++m) {
        const TriangleSignature sig(k, l, m);
        const auto set = tw::multiplier_set(sig);
        ASSERT_FALSE(set.empty());
        EXPECT_TRUE(set.front().is_one());
        EXPECT_TRUE(std::any_of(set.begin(), set.end(), [](auto r) { return r.is_minus_one(); }));
        for (const auto& x : set)
          for (const auto& y : set)
            EXPECT_TRUE(std::binary_search(set.begin(), set.end(), x * y)) << sig.to_string();
      }
}

TEST(MultiplierSet, HyperbolicIsPlusMinusOneAndSphericalIsEverything) {
  for (Integer k = 2; k <= 12; ++k)
    for (Integer l = k; l <= 12; ++l)
      for (Integer m = l; m <= 12; ++m) {
        const TriangleSignature sig(k, l, m);
        const auto set = tw::multiplier_set(sig);
        if (sig.is_hyperbolic()) {
          EXPECT_EQ(set.size(), 2u) << sig.to_string();
          for (const auto& r : set) EXPECT_TRUE(r.is_plus_minus_one());
        } else if (sig.is_spherical()) {
          EXPECT_EQ(set, tw::unit_group(sig.lcm())) << sig.to_string();
          for (const auto& p : tw::lattice_points(sig)) {
            const auto tag = tw::region_of(p);
            EXPECT_TRUE(tag != RegionTag::s && tag != RegionTag::neg_s);
          }
        }
      }
}

TEST(MultiplierSet, UnitsPermuteTAndMultipliersPreserveTags) {
  for (const TriangleSignature sig : {TriangleSignature(3, 3, 3), TriangleSignature(2, 4, 4),
                                      TriangleSignature(2, 3, 6), TriangleSignature(4, 4, 4),
                                      TriangleSignature(2, 3, 7), TriangleSignature(3, 4, 6)}) {
    std::set<Triple> t_points;
    for (const auto& p : tw::lattice_points(sig))
      if (tw::region_of(p) == RegionTag::t) t_points.emplace(p.a(), p.b(), p.c());
    for (const auto& r : tw::unit_group(sig.lcm())) {
      std::set<Triple> image;
      for (const auto& [a, b, c] : t_points) {
        const auto q = LatticePoint(sig, a, b, c).scaled(r.value());
        image.emplace(q.a(), q.b(), q.c());
      }
      EXPECT_EQ(image, t_points) << sig.to_string() << " r=" << r.value();
    }
    const auto m = tw::multiplier_set(sig);
    for (const auto& r : m) {
      for (const auto& p : tw::bset_points(sig)) {
        const auto before = tw::region_of(p);
        const auto after = tw::region_of(p.scaled(r.value()));
        const bool in_before = before == RegionTag::s || before == RegionTag::neg_s;
        const bool in_after = after == RegionTag::s || after == RegionTag::neg_s;
        EXPECT_EQ(in_before, in_after);
      }
    }
  }
}

TEST(BsetPoints, Examples) {
  EXPECT_TRUE(tw::bset_points({2, 3, 5}).empty());
  EXPECT_TRUE(tw::bset_points({2, 2, 2}).empty());
  EXPECT_EQ(coordinates(tw::bset_points({3, 3, 3})), (std::set<Triple>{{1, 1, 1}, {2, 2, 2}}));
  EXPECT_EQ(tw::bset_points({2, 3, 7}).size(), 2u);
  EXPECT_EQ(tw::bset_points({2, 4, 5}).size(), 2u);
  EXPECT_EQ(tw::bset_points({3, 3, 4}).size(), 2u);
  EXPECT_EQ(tw::bset_points({2, 3, 6}).size(), 2u);
  EXPECT_EQ(tw::bset_points({4, 4, 4}).size(), 8u);
}

TEST(NSet, Examples) {
  EXPECT_TRUE(tw::n_set(3, 3).empty());
  EXPECT_EQ(values(tw::n_set(2, 3)), (std::vector<Integer>{1, 5}));
  EXPECT_TRUE(tw::n_set(4, 4).empty());
}

TEST(NSet, DirectAndEmptinessAgree) {
  for (Integer k = 2; k <= 12; ++k)
    for (Integer m = 2; m <= 12; ++m) {
      EXPECT_EQ(tw::n_set(k, m), tw::n_set_by_emptiness(k, m)) << k << "," << m;
    }
}

TEST(FiberCount, Examples) {
  EXPECT_EQ(tw::fiber_count({2, 3, 7}, 1, 1).enumerated, 1);
  EXPECT_EQ(tw::fiber_count({2, 3, 6}, 1, 1).enumerated, 0);
  EXPECT_EQ(code_of([] { tw::fiber_count({2, 2, 3}, 1, 1); }), tw::ErrorCode::invalid_fiber);
  EXPECT_EQ(code_of([] { tw::fiber_count({2, 3, 7}, 0, 1); }), tw::ErrorCode::invalid_fiber);
}

TEST(FiberCount, ClosedFormMatchesEnumeration) {
  for (Integer k = 2; k <= 12; ++k)
    for (Integer l = 2; l <= 12; ++l)
      for (Integer m = 2; m <= 30; ++m)
        for (Integer a = 1; a < k; ++a)
          for (Integer b = 1; b < l; ++b) {
            if (a * l + b * k >= k * l) continue;
            const auto f = tw::fiber_count({k, l, m}, a, b);
            ASSERT_EQ(f.enumerated, f.closed_form);
          }
}
