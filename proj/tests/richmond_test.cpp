#include "biquad/richmond.hpp"
#include "biquad/seed_catalog.hpp"
#include "biquad/verifier.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace biquad {
namespace {

NumericSolution euler() { return verify(numeric(59, 158, 133, 134)); }
ParametricSolution zajta11() { return std::get<ParametricSolution>(get_seed("zajta-11").solution); }

template <class R>
R quadratic_value(const TangentQuadratic<R>& t, const R& p, const R& q) {
  return t.a * p * p + t.b * p * q + t.c * q * q;
}

TEST(TangentQuadratic, UnitPoint) {
  const auto t = tangent_quadratic(verify(numeric(1, 1, 1, 1)));
  EXPECT_EQ(t.a, 8);
  EXPECT_EQ(t.b, 16);
  EXPECT_EQ(t.c, 8);
}

TEST(TangentQuadratic, EulerPoint) {
  // Values from a separate big-integer evaluation of the quadratic's coefficients.
  const auto t = tangent_quadratic(euler());
  EXPECT_EQ(t.a, Integer("69076015540587830228640128"));
  EXPECT_EQ(t.b, Integer("394159279227391671708651136"));
  EXPECT_EQ(t.c, Integer("562268682738439286543307008"));
  EXPECT_EQ(Integer(t.b * t.b - 4 * t.a * t.c), discriminant_closed_form(euler()));
  EXPECT_EQ(Integer(t.b * t.b - 4 * t.a * t.c), Integer("4416333751794030506999518573639548350817144422400"));
}

TEST(TangentQuadratic, DiscriminantVanishesWhenZAndWAgree) {
  for (const auto& s : {numeric(1, 1, 1, 1), numeric(3, -3, 3, 3), numeric(-2, 2, 2, -2)}) {
    const auto t = tangent_quadratic(verify(s));
    EXPECT_EQ(Integer(t.b * t.b - 4 * t.a * t.c), 0) << to_string(s);
  }
}

TEST(TangentQuadratic, RequiresVerifiedInput) {
  EXPECT_THROW(tangent_quadratic(numeric(1, 1, 1, 1)), std::invalid_argument);
  EXPECT_THROW(verify(numeric(1, 2, 3, 4)), std::domain_error);
}

TEST(InflectionalRoots, UnitPointHasDoubleRoot) {
  const auto roots = inflectional_roots(verify(numeric(1, 1, 1, 1)));
  for (const auto& r : roots) {
    EXPECT_EQ(r.p, -8);
    EXPECT_EQ(r.q, 8);
  }
}

TEST(InflectionalRoots, EulerPoint) {
  const auto s = euler();
  const auto t = tangent_quadratic(s);
  const auto roots = inflectional_roots(s);
  EXPECT_EQ(roots[0].p, Integer("-198130393361225916104169728"));
  EXPECT_EQ(roots[1].p, Integer("-196028885866165755604481408"));
  for (const auto& r : roots) {
    EXPECT_EQ(r.q, t.a);
    EXPECT_EQ(quadratic_value(t, r.p, r.q), 0);
  }
}

TEST(InflectionalRoots, ParametricRootsSatisfyQuadratic) {
  const auto s = zajta11();
  const auto t = tangent_quadratic(s);
  for (const auto& r : inflectional_roots(s)) EXPECT_TRUE(quadratic_value(t, r.p, r.q).is_zero());
}

TEST(InflectionalRoots, DegenerateQuadratic) {
  EXPECT_THROW(inflectional_roots(verify(numeric(0, 1, 1, 0))), std::domain_error);
}

TEST(TangentPlaneRS, EulerPointSatisfiesTangentAndSumConditions) {
  const auto s = euler();
  const auto x4 = pow_ui(s.x, 4), y4 = pow_ui(s.y, 4), z4 = pow_ui(s.z, 4), w4 = pow_ui(s.w, 4);
  for (auto b : {Branch::plus, Branch::minus}) {
    const auto m = scaled_point(s, b);
    EXPECT_EQ(x4 * m.p + y4 * m.q - z4 * m.r - w4 * m.s, 0);
    EXPECT_EQ(x4 * m.p * m.p + y4 * m.q * m.q - z4 * m.r * m.r - w4 * m.s * m.s, 0);
    EXPECT_EQ(m.p + m.q + m.r + m.s, 0);
  }
}

TEST(TangentPlaneRS, GenericIdentity) {
  const auto g = generic_point();
  const QuadPoly X = g.x, Y = g.y, Z = g.z, W = g.w;
  const QuadPoly p = X + 2L * Y, q = Z * W - QuadPoly::constant(3);
  const auto rs = tangent_plane_rs(g, p, q);
  const auto x4 = power(X, 4), y4 = power(Y, 4), z4 = power(Z, 4), w4 = power(W, 4);
  const QuadPoly pd = p * rs.denom, qd = q * rs.denom;
  EXPECT_TRUE((x4 * pd + y4 * qd - z4 * rs.r - w4 * rs.s).is_zero());
  EXPECT_TRUE((pd + qd + rs.r + rs.s).is_zero());
}

TEST(TangentPlaneRS, ParametricScaledPointSatisfiesAllThreeConditions) {
  const auto s = zajta11();
  const auto x4 = power(s.x, 4), y4 = power(s.y, 4), z4 = power(s.z, 4), w4 = power(s.w, 4);
  for (auto b : {Branch::plus, Branch::minus}) {
    const auto m = scaled_point(s, b);
    EXPECT_TRUE((x4 * m.p + y4 * m.q - z4 * m.r - w4 * m.s).is_zero());
    EXPECT_TRUE((x4 * square(m.p) + y4 * square(m.q) - z4 * square(m.r) - w4 * square(m.s)).is_zero());
    EXPECT_TRUE((m.p + m.q + m.r + m.s).is_zero());
  }
}

TEST(TangentPlaneRS, DegenerateWhenZEqualsW) {
  EXPECT_THROW(tangent_plane_rs(verify(numeric(1, 1, 1, 1)), Integer(1), Integer(1)), std::domain_error);
}

TEST(Transform, UnitPointGivesTrivialSolution) {
  const auto raw = raw_transform(verify(numeric(1, 1, 1, 1)), Branch::plus);
  EXPECT_EQ(raw, numeric(8, 8, -8, 8));
  EXPECT_EQ(transform(verify(numeric(1, 1, 1, 1)), Branch::plus), numeric(1, 1, 1, 1));
}

TEST(Transform, ClosedFormAgreesWithDerivationChain) {
  // normalized points from a separate evaluation of the roots and of (r, s)
  const NumericSolution expected[2] = {
      {Integer("47301468159703"), Integer("44162725988761"), Integer("54398746431911"), Integer("15168229732247")},
      {Integer("161634227550911"), Integer("152526608743862"), Integer("50577474852863"), Integer("186785699397086")}};
  const auto s = euler();
  for (auto b : {Branch::plus, Branch::minus}) {
    const auto closed = transform(s, b);
    EXPECT_EQ(closed, expected[b == Branch::plus ? 0 : 1]);
    EXPECT_EQ(normalize(apply_scaled_point(s, scaled_point(s, b))), closed);
  }
  const auto z = zajta11();
  for (auto b : {Branch::plus, Branch::minus}) {
    EXPECT_EQ(normalize(apply_scaled_point(z, scaled_point(z, b))), transform(z, b));
  }
}

TEST(Transform, ZajtaElevenBranches) {
  const auto s = zajta11();
  const auto minus = transform(s, Branch::minus);
  EXPECT_EQ(minus, golden_deg74());
  EXPECT_TRUE(minus.verified);
  EXPECT_EQ(formal_degree(transform(s, Branch::plus)), 71u);
}

TEST(Transform, RawDegreeIsThirteenTimesSeedDegree) {
  for (const char* name : {"zajta-11", "zajta-13"}) {
    const auto s = std::get<ParametricSolution>(get_seed(name).solution);
    const std::size_t d = *formal_degree(s);
    for (auto b : {Branch::plus, Branch::minus}) {
      const auto raw = raw_transform(s, b);
      EXPECT_EQ(formal_degree(raw), 13 * d);
      EXPECT_TRUE(residual(raw).is_zero());
    }
  }
}

TEST(Normalize, Numeric) {
  EXPECT_EQ(normalize(numeric(8, 8, -8, 8)), numeric(1, 1, 1, 1));
  EXPECT_EQ(normalize(numeric(-6, 0, 9, 3)), numeric(2, 0, 3, 1));
  EXPECT_THROW(normalize(numeric(0, 0, 0, 0)), std::domain_error);
}

TEST(Normalize, RemovesCommonFormFactorAndContent) {
  const auto s = zajta11();
  const BivarPoly f{-2, 3, 5};
  const ParametricSolution scaled{s.x * f, s.y * f, s.z * f, s.w * f, true};
  EXPECT_EQ(normalize(scaled), normalize(s));
  EXPECT_EQ(formal_degree(normalize(scaled)), 11u);
}

TEST(Normalize, IdempotentAndResidualPreserving) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> k(-40, 40);
  const auto base = euler();
  for (int trial = 0; trial < 50; ++trial) {
    const long draw = k(rng);
    const Integer m = draw == 0 ? 1 : draw;
    for (const auto& v : symmetry_variants(base)) {
      const NumericSolution scaled{v.x * m, v.y * m, v.z * m, v.w * m, true};
      const auto n = normalize(scaled);
      EXPECT_EQ(normalize(n), n);
      EXPECT_EQ(residual(n), 0);
    }
  }
  const auto p = transform(zajta11(), Branch::plus);
  EXPECT_EQ(normalize(p), p);
}

TEST(IsTrivial, Examples) {
  EXPECT_FALSE(is_trivial(numeric(59, 158, 133, 134)));
  EXPECT_TRUE(is_trivial(numeric(5, 7, 7, 5)));
  EXPECT_TRUE(is_trivial(numeric(-5, 7, 5, -7)));
  const BivarPoly a{1, 2, 3}, b{0, 4, -1};
  EXPECT_TRUE(is_trivial(ParametricSolution{a, b, -a, b}));
  EXPECT_FALSE(is_trivial(zajta11()));
}

TEST(SymmetryVariants, SixtyFourSolutions) {
  const auto vs = symmetry_variants(euler());
  ASSERT_EQ(vs.size(), 64u);
  for (const auto& v : vs) EXPECT_EQ(residual(v), 0);
  EXPECT_EQ(symmetry_variants(zajta11()).size(), 64u);
}

TEST(SymmetryVariants, NormalizedOrbitHasFourElements) {
  std::set<std::tuple<Integer, Integer, Integer, Integer>> orbit;
  for (const auto& v : symmetry_variants(euler())) {
    const auto n = normalize(v);
    orbit.emplace(n.x, n.y, n.z, n.w);
  }
  // 2 orderings of {59, 158} times 2 of {133, 134}
  EXPECT_EQ(orbit.size(), 4u);
}

TEST(Equivalent, Basics) {
  const auto s = euler();
  EXPECT_TRUE(equivalent(s, s));
  EXPECT_TRUE(equivalent(s, verify(numeric(158, -59, 133, 134))));
  EXPECT_TRUE(equivalent(s, verify(numeric(118, 316, 266, 268))));
  EXPECT_FALSE(equivalent(s, verify(numeric(133, 134, 59, 158))));
  EXPECT_FALSE(equivalent(QuarticSolution(zajta11()), QuarticSolution(golden_deg74())));
  EXPECT_THROW(equivalent(QuarticSolution(s), QuarticSolution(zajta11())), std::invalid_argument);
}

TEST(Equivalent, SymmetricAndTransitiveOnOrbit) {
  const auto vs = symmetry_variants(euler());
  for (std::size_t i = 0; i < vs.size(); i += 7) {
    for (std::size_t j = 0; j < vs.size(); j += 5) {
      const auto a = verify(vs[i]), b = verify(vs[j]);
      EXPECT_TRUE(equivalent(a, b));
      EXPECT_TRUE(equivalent(b, a));
    }
  }
}

TEST(OrbitCollapse, EulerPoint) {
  const auto s = euler();
  const auto plus = transform(s, Branch::plus), minus = transform(s, Branch::minus);
  for (const auto& v : symmetry_variants(s)) {
    for (auto b : {Branch::plus, Branch::minus}) {
      const auto t = transform(verify(v), b);
      EXPECT_TRUE(equivalent(t, plus) || equivalent(t, minus));
    }
  }
}

TEST(TrivialInTrivialOut, RandomScaledTrivialPoints) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> k(-30, 30);
  for (int trial = 0; trial < 30; ++trial) {
    const long a = k(rng), b = k(rng);
    if (a == 0 || b == 0) continue;
    for (const auto& s : {numeric(a, b, a, b), numeric(a, b, -b, a)}) {
      for (auto br : {Branch::plus, Branch::minus}) {
        EXPECT_TRUE(is_trivial(transform(verify(s), br))) << to_string(s);
      }
    }
  }
}

}  // namespace
}  // namespace biquad
