#include "biquad/bivar_poly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace biquad {
namespace {

TEST(BivarPoly, ZeroHasNoDegree) {
  BivarPoly zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_THROW(zero.degree(), std::domain_error);
  EXPECT_TRUE((BivarPoly{0, 0, 0}).is_zero());
}

TEST(BivarPoly, KeepsLeadingAndTrailingZeros) {
  BivarPoly p{0, 0, 3, 9, 0};
  EXPECT_EQ(p.degree(), 4u);
  EXPECT_EQ(p.leading_zeros(), 2u);
  EXPECT_EQ(p.trailing_zeros(), 1u);
  EXPECT_EQ(p.leading_coefficient(), 3);
}

TEST(BivarPoly, Multiplication) {
  EXPECT_EQ((BivarPoly{1, 1} * BivarPoly{1, -1}), (BivarPoly{1, 0, -1}));
  EXPECT_EQ((BivarPoly{1, 2} * BivarPoly{1, 3}), (BivarPoly{1, 5, 6}));
  EXPECT_TRUE((BivarPoly{} * BivarPoly{1, 2}).is_zero());
  EXPECT_TRUE((BivarPoly{1, 2} * BivarPoly{}).is_zero());
}

TEST(BivarPoly, Power) {
  EXPECT_EQ(power(BivarPoly{1, 1}, 2), (BivarPoly{1, 2, 1}));
  EXPECT_EQ(power(BivarPoly{3, 7, 1}, 0), BivarPoly::constant(1));
  EXPECT_EQ(power(BivarPoly{1, 0, -1}, 2), (BivarPoly{1, 0, -2, 0, 1}));
}

TEST(BivarPoly, SumOfDifferentDegreesIsRejected) {
  EXPECT_THROW((BivarPoly{1, 1} + BivarPoly{1, 1, 1}), std::domain_error);
  EXPECT_EQ((BivarPoly{} + BivarPoly{1, 1, 1}), (BivarPoly{1, 1, 1}));
  EXPECT_TRUE((BivarPoly{1, 2} - BivarPoly{1, 2}).is_zero());
}

TEST(BivarPoly, ContentPrimitive) {
  auto [c, p] = content_primitive(BivarPoly{2, 4, 6});
  EXPECT_EQ(c, 2);
  EXPECT_EQ(p, (BivarPoly{1, 2, 3}));

  auto [c2, p2] = content_primitive(BivarPoly{-3});
  EXPECT_EQ(c2, 3);
  EXPECT_EQ(p2, (BivarPoly{-1}));

  EXPECT_THROW(content_primitive(BivarPoly{}), std::domain_error);
}

TEST(BivarPoly, Gcd) {
  EXPECT_EQ(gcd(BivarPoly{1, 0, -1}, BivarPoly{1, -1}), (BivarPoly{1, -1}));
  EXPECT_EQ(gcd(BivarPoly{2, 2}, BivarPoly{4, 4}), (BivarPoly{1, 1}));
  EXPECT_EQ(gcd(BivarPoly{-6, 4, 2}, BivarPoly{}), (BivarPoly{3, -2, -1}));
  EXPECT_THROW(gcd(BivarPoly{}, BivarPoly{}), std::domain_error);
  // u^2 v (u + v) and u v^3: common factor u v
  EXPECT_EQ(gcd(BivarPoly{0, 1, 1, 0}, BivarPoly{0, 0, 0, 1, 0}), (BivarPoly{0, 1, 0}));
}

TEST(BivarPoly, EvalAt) {
  EXPECT_EQ(eval_at(BivarPoly{1, 2, 1}, 1, 1), 4);
  EXPECT_EQ(eval_at(BivarPoly{7, -3, 5, 2}, 1, 0), 7);
  EXPECT_EQ(eval_at(BivarPoly{1, 2, 1}, 3, -5), 4);  // (3 - 5)^2
  EXPECT_EQ(eval_at(BivarPoly{}, 3, 4), 0);
}

TEST(BivarPoly, ExactDivision) {
  EXPECT_EQ(exact_div(BivarPoly{1, 0, -1}, BivarPoly{1, 1}), (BivarPoly{1, -1}));
  EXPECT_EQ(exact_div(BivarPoly{0, 0, 2, 2}, BivarPoly{0, 1}), (BivarPoly{0, 2, 2}));
  EXPECT_THROW(exact_div(BivarPoly{1, 0, 1}, BivarPoly{1, 1}), std::domain_error);
  EXPECT_THROW(exact_div(BivarPoly{1, 1}, BivarPoly{}), std::domain_error);
}

class BivarPolyProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20261018};
};

TEST_F(BivarPolyProperties, RingLaws) {
  std::uniform_int_distribution<std::size_t> deg(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t da = deg(rng), db = deg(rng);
    const auto a = testing::random_form(rng, da);
    const auto b = testing::random_form(rng, db);
    const auto c = testing::random_form(rng, db);
    const auto d = testing::random_form(rng, deg(rng));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).degree(), da + db);
  }
}

TEST_F(BivarPolyProperties, EvalIsRingMorphism) {
  std::uniform_int_distribution<std::size_t> deg(0, 10);
  std::uniform_int_distribution<long> pt(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_form(rng, deg(rng));
    const auto b = testing::random_form(rng, deg(rng));
    const Integer u = pt(rng), v = pt(rng);
    EXPECT_EQ(eval_at(a * b, u, v), eval_at(a, u, v) * eval_at(b, u, v));
  }
}

TEST_F(BivarPolyProperties, GcdOfCommonMultiples) {
  std::uniform_int_distribution<std::size_t> deg(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_form(rng, deg(rng), 9);
    const auto b = testing::random_form(rng, deg(rng), 9);
    const auto g = testing::random_form(rng, deg(rng), 9);
    const auto lhs = gcd(a * g, b * g);
    const auto rhs = gcd(g * gcd(a, b), BivarPoly{});  // primitive, sign-normalized
    EXPECT_EQ(lhs, rhs);
    EXPECT_NO_THROW(exact_div(a * g, lhs));
    EXPECT_NO_THROW(exact_div(b * g, lhs));
  }
}

TEST_F(BivarPolyProperties, ExactDivisionInvertsMultiplication) {
  std::uniform_int_distribution<std::size_t> deg(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_form(rng, deg(rng));
    const auto b = testing::random_form(rng, deg(rng));
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

}  // namespace
}  // namespace biquad
