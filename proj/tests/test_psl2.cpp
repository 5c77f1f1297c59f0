#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "triangle_words/psl2.hpp"
#include "test_support.hpp"

namespace tw = triangle_words;
using tw::Angle;
using tw::ErrorCode;
using tw::Mat2;
using tw::testing::code_of;

namespace {

void expect_matrix_near(const Mat2& x, const Mat2& y, double eps) {
  EXPECT_NEAR(x.a, y.a, eps);
  EXPECT_NEAR(x.b, y.b, eps);
  EXPECT_NEAR(x.c, y.c, eps);
  EXPECT_NEAR(x.d, y.d, eps);
}

Mat2 random_sl2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> entry(-3.0, 3.0);
  for (;;) {
    const double a = entry(rng);
    const double b = entry(rng);
    const double c = entry(rng);
    if (std::abs(a) < 0.2) continue;
    // Choose d so that ad - bc = 1.
    return {a, b, c, (1.0 + b * c) / a};
  }
}

std::vector<Angle> small_angles() {
  std::vector<Angle> out;
  for (tw::Integer q = 2; q <= 8; ++q)
    for (tw::Integer p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

}  // namespace

TEST(Angle, ReducesIntoUnitInterval) {
  EXPECT_EQ(Angle(2, 4), Angle(1, 2));
  EXPECT_EQ(Angle(-1, 3), Angle(2, 3));
  EXPECT_EQ(Angle(7, 3), Angle(1, 3));
  EXPECT_TRUE(Angle(5, 5).is_zero());
  EXPECT_EQ(Angle::parse("3/6").to_string(), "1/2");
  EXPECT_EQ(Angle::parse("2"), Angle(0, 1));
  EXPECT_TRUE(Angle(1, 3) < Angle(1, 2));
  EXPECT_EQ(code_of([] { Angle(1, 0); }), ErrorCode::invalid_angle);
  EXPECT_EQ(code_of([] { Angle::parse("1/0"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { Angle::parse("x/2"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { Angle::parse(""); }), ErrorCode::parse_error);
}

TEST(Orevkov, Examples) {
  EXPECT_TRUE(tw::orevkov_solvable({1, 3}, {1, 3}, {1, 3}));
  EXPECT_FALSE(tw::orevkov_solvable({1, 2}, {1, 2}, {1, 2}));
  EXPECT_TRUE(tw::orevkov_solvable({1, 2}, {1, 3}, {1, 7}));
  EXPECT_TRUE(tw::orevkov_solvable({2, 3}, {2, 3}, {2, 3}));
  EXPECT_EQ(code_of([] { tw::orevkov_solvable({0, 1}, {1, 2}, {1, 2}); }),
            ErrorCode::invalid_angle);
}

TEST(Orevkov, SymmetricAndTrueOnZeroSum) {
  const auto angles = small_angles();
  for (const auto& a : angles)
    for (const auto& b : angles) {
      for (const auto& c : angles) {
        const bool v = tw::orevkov_solvable(a, b, c);
        EXPECT_EQ(tw::orevkov_solvable(b, a, c), v);
        EXPECT_EQ(tw::orevkov_solvable(c, b, a), v);
        EXPECT_EQ(tw::orevkov_solvable(a, c, b), v);
      }
      const Angle c(a.den() * b.den() - a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
      if (!c.is_zero()) EXPECT_TRUE(tw::orevkov_solvable(a, b, c));
    }
}

TEST(SigmaMatrix, Examples) {
  expect_matrix_near(tw::sigma_matrix({1, 2}), {0, -1, 1, 0}, 1e-15);
  expect_matrix_near(tw::sigma_matrix({0, 1}), {1, 0, 0, 1}, 1e-15);
  const double h = std::sqrt(3.0) / 2.0;
  expect_matrix_near(tw::sigma_matrix({1, 3}), {0.5, -h, h, 0.5}, 1e-15);
}

TEST(ClassOf, RoundTripSignFlipAndConjugation) {
  EXPECT_NEAR(tw::class_of(tw::sigma_matrix({1, 3})), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(tw::class_of(-tw::sigma_matrix({1, 3})), 1.0 / 3.0, 1e-12);
  std::mt19937_64 rng(11);
  for (const auto& a : small_angles()) {
    EXPECT_NEAR(tw::class_of(tw::sigma_matrix(a)), a.value(), 1e-12);
    for (int i = 0; i < 50; ++i) {
      const Mat2 g = random_sl2(rng);
      EXPECT_NEAR(tw::class_of(g * tw::sigma_matrix(a) * g.inverse()), a.value(), 1e-9);
    }
  }
}

TEST(ClassOf, RejectsNonElliptic) {
  EXPECT_EQ(code_of([] { tw::class_of({1, 0, 0, 1}); }), ErrorCode::not_elliptic);
  EXPECT_EQ(code_of([] { tw::class_of({2, 0, 0, 0.5}); }), ErrorCode::not_elliptic);
  EXPECT_EQ(code_of([] { tw::class_of({1, 1, 0, 1}); }), ErrorCode::not_elliptic);
  EXPECT_EQ(code_of([] { tw::class_of({0, -2, 2, 0}); }), ErrorCode::not_elliptic);
}

TEST(NumericSearch, Examples) {
  // Sum exactly 1: the search abstains, but g = identity already realizes it.
  EXPECT_EQ(code_of([] { tw::numeric_triple_search({1, 3}, {1, 3}, {1, 3}); }),
            ErrorCode::inconclusive);
  const Mat2 s = tw::sigma_matrix({1, 3});
  EXPECT_NEAR(tw::class_of((s * s).inverse()), 1.0 / 3.0, 1e-12);
  EXPECT_FALSE(tw::numeric_triple_solvable({1, 2}, {1, 2}, {1, 2}));
  const auto r = tw::numeric_triple_search({1, 2}, {1, 3}, {1, 7});
  ASSERT_TRUE(r.solvable);
  const Mat2 g = tw::rotation(r.phi) * Mat2{std::exp(r.s), 0, 0, std::exp(-r.s)};
  const Mat2 w = (tw::sigma_matrix({1, 2}) * g * tw::sigma_matrix({1, 3}) * g.inverse()).inverse();
  EXPECT_NEAR(tw::class_of(w), 1.0 / 7.0, 1e-3);
}

TEST(NumericSearch, InconclusiveNearBoundary) {
  EXPECT_EQ(code_of([] { tw::numeric_triple_search({1, 2}, {1, 3}, {1, 6}); }),
            ErrorCode::inconclusive);
  EXPECT_EQ(code_of([] { tw::numeric_triple_search({2, 3}, {2, 3}, {2, 3}); }),
            ErrorCode::inconclusive);
  EXPECT_EQ(code_of([] { tw::numeric_triple_search({0, 3}, {2, 3}, {2, 3}); }),
            ErrorCode::invalid_angle);
}

TEST(NumericSearch, AgreesWithExactTestOnQuarterAndThirdAngles) {
  const std::vector<Angle> angles{{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}};
  for (std::size_t i = 0; i < angles.size(); ++i)
    for (std::size_t j = i; j < angles.size(); ++j)
      for (std::size_t k = j; k < angles.size(); ++k) {
        const double sum = angles[i].value() + angles[j].value() + angles[k].value();
        if (std::abs(sum - 1.0) < 0.02 || std::abs(sum - 2.0) < 0.02) continue;
        EXPECT_EQ(tw::numeric_triple_solvable(angles[i], angles[j], angles[k]),
                  tw::orevkov_solvable(angles[i], angles[j], angles[k]))
            << angles[i].to_string() << " " << angles[j].to_string() << " "
            << angles[k].to_string();
      }
}
