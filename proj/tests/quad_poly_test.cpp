#include "biquad/quad_poly.hpp"
#include "biquad/seed_catalog.hpp"
#include "biquad/solution.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace biquad {
namespace {

const QuadPoly X = QuadPoly::X(), Y = QuadPoly::Y(), Z = QuadPoly::Z(), W = QuadPoly::W();

TEST(QuadPoly, NoZeroCoefficientsStored) {
  QuadPoly p = X + Y;
  p -= Y;
  EXPECT_EQ(p, X);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE((X - X).is_zero());
}

TEST(QuadPoly, GradedLexOrder) {
  const QuadPoly p = X * Y + power(Z, 3) + W;
  EXPECT_EQ(p.leading_term().first, (Exponents{0, 0, 3, 0}));
  EXPECT_FALSE(p.homogeneous_degree());
  EXPECT_EQ(surface_form().homogeneous_degree(), 4u);
  EXPECT_EQ(surface_form().leading_term().first, (Exponents{4, 0, 0, 0}));
}

TEST(QuadPoly, ExactDivision) {
  EXPECT_EQ(exact_div(surface_form() * (X + Y), surface_form()), X + Y);
  const QuadPoly n = X * X * Y - 3L * W;
  EXPECT_EQ(exact_div(n, QuadPoly::constant(1)), n);
  try {
    exact_div(X, Y);
    FAIL() << "expected remainder error";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "remainder nonzero");
  }
  EXPECT_THROW(exact_div(X, QuadPoly{}), std::domain_error);
  EXPECT_THROW(exact_div(2L * X, QuadPoly::constant(3)), std::domain_error);
}

TEST(QuadPoly, ExactDivisionProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> terms(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = testing::random_quad(rng, terms(rng));
    const auto q = testing::random_quad(rng, terms(rng));
    EXPECT_EQ(exact_div(d * q, d), q);
  }
}

TEST(QuadPoly, Compose) {
  const auto s = std::get<ParametricSolution>(get_seed("zajta-11").solution);
  EXPECT_EQ(compose(X * Y, s), s.x * s.y);
  EXPECT_TRUE(compose(surface_form(), s).is_zero());
  EXPECT_EQ(compose(QuadPoly::constant(5), s), BivarPoly::constant(5));
  EXPECT_EQ(compose(X * Y * Z, s).degree(), 33u);

  ParametricSolution mixed{BivarPoly{1, 1}, BivarPoly{1, 1, 1}, BivarPoly{1, 1}, BivarPoly{1, 1}};
  EXPECT_THROW(compose(X, mixed), std::domain_error);
}

TEST(QuadPoly, ComposeIsRingMorphism) {
  std::mt19937_64 rng(11);
  const auto s = std::get<ParametricSolution>(get_seed("zajta-13").solution);
  // homogeneous F, G so every composed sum stays homogeneous
  for (int trial = 0; trial < 20; ++trial) {
    auto homogeneous = [&](unsigned degree) {
      QuadPoly p;
      std::uniform_int_distribution<unsigned> e(0, degree);
      std::uniform_int_distribution<long> c(-5, 5);
      for (int k = 0; k < 4; ++k) {
        const unsigned a = e(rng);
        const unsigned b = std::uniform_int_distribution<unsigned>(0, degree - a)(rng);
        const unsigned cc = std::uniform_int_distribution<unsigned>(0, degree - a - b)(rng);
        p.add_term({a, b, cc, degree - a - b - cc}, c(rng));
      }
      return p;
    };
    const auto f = homogeneous(2);
    const auto g = homogeneous(3);
    EXPECT_EQ(compose(f * g, s), compose(f, s) * compose(g, s));
  }
}

}  // namespace
}  // namespace biquad
