#include <gtest/gtest.h>

#include "chern/fulton_general.hpp"

using namespace chern;

namespace {

/// c_k X - c_{k-1} X^2 + ... + (-1)^(k+1)... the ladder written out term by term.
ChowClass ladder(const AmbientRing &ring, unsigned k) {
  ChowClass x = ring.hypersurface(), out = ChowClass::zero(ring.table()), xp = x;
  for (unsigned i = 0; i <= k; ++i) {
    ChowClass term = ring.chern(k - i) * xp;
    out = (i % 2 == 0) ? out + term : out - term;
    xp = xp * x;
  }
  return out;
}

} // namespace

TEST(SegreClass, Examples) {
  AmbientRing one(1), three(3);
  EXPECT_EQ(segre_class(one), one.hypersurface());
  ChowClass x = three.hypersurface();
  EXPECT_EQ(segre_class(three), x - x * x + x * x * x);
}

TEST(SegreClass, InvertsOnePlusX) {
  for (unsigned n = 1; n <= 10; ++n) {
    AmbientRing ring(n);
    EXPECT_EQ((ring.one() + ring.hypersurface()) * segre_class(ring), ring.hypersurface());
  }
}

TEST(FultonClass, Examples) {
  AmbientRing one(1), two(2), three(3);
  EXPECT_EQ(fulton_class(one), one.hypersurface());
  ChowClass x = two.hypersurface(), c1 = two.chern(1);
  EXPECT_EQ(fulton_class(two), x + c1 * x - x * x);
  ChowClass X = three.hypersurface();
  EXPECT_EQ(fulton_class(three).component(3),
            three.chern(2) * X - three.chern(1) * X * X + X * X * X);
}

TEST(FultonClass, WeightComponentsFollowTheLadder) {
  for (unsigned n = 1; n <= 8; ++n) {
    AmbientRing ring(n);
    ChowClass f = fulton_class(ring);
    for (unsigned k = 0; k < n; ++k)
      EXPECT_EQ(f.component(k + 1), ladder(ring, k)) << n << " " << k;
    EXPECT_TRUE(f.component(0).is_zero());
  }
}

TEST(GeneralEulerPoly, Examples) {
  AmbientRing one(1), two(2);
  EXPECT_EQ(general_euler_poly(one), ChowPolynomial({ChowClass(), one.one()}, "s"));
  EXPECT_EQ(general_euler_poly(two), ChowPolynomial({ChowClass(), two.chern(1), -two.one()}, "s"));
}

TEST(GeneralEulerPoly, EvaluatesToTopFultonClass) {
  for (unsigned n = 1; n <= 8; ++n) {
    AmbientRing ring(n);
    EXPECT_EQ(general_euler_poly(ring).evaluate(ring.hypersurface()), fulton_class(ring).component(n));
  }
}

TEST(VerifyIdentity, SmallCasesByHand) {
  AmbientRing two(2);
  ChowClass x = two.hypersurface();
  EXPECT_EQ(theta_ladder(two, 1), x);
  EXPECT_EQ(theta_ladder(two, 1) + theta_ladder(two, 0), fulton_class(two));
  EXPECT_TRUE(verify_identity(1u));
  EXPECT_TRUE(verify_identity(2u));
}

TEST(VerifyIdentity, HoldsSymbolicallyUpToEight) {
  for (unsigned n = 1; n <= 8; ++n) {
    AmbientRing ring(n);
    EXPECT_TRUE(verify_identity(ring)) << n;
    ChowClass f = fulton_class(ring);
    for (unsigned j = 0; j < n; ++j)
      EXPECT_EQ(theta_ladder(ring, j), f.component(n - j)) << n << " " << j;
  }
}

TEST(VerifyIdentity, DetectsAPerturbedClass) {
  AmbientRing ring(3);
  ChowClass sum = ChowClass::zero(ring.table());
  for (unsigned j = 0; j < 3; ++j)
    sum = sum + theta_ladder(ring, j);
  EXPECT_EQ(sum, fulton_class(ring));
  EXPECT_NE(sum + ring.chern(1) * ring.chern(2), fulton_class(ring));
}

TEST(SpecializeToProjective, Examples) {
  auto p2 = projective_table(2);
  for (long long d = 1; d <= 6; ++d)
    EXPECT_EQ(specialize_to_projective(2u, d),
              ChowClass::monomial(p2, {1}, d) + ChowClass::monomial(p2, {2}, 3 * d - d * d));
  auto p4 = projective_table(4);
  EXPECT_EQ(specialize_to_projective(4u, 5), ChowClass::monomial(p4, {1}, 5) +
                                               ChowClass::monomial(p4, {3}, 50) +
                                               ChowClass::monomial(p4, {4}, -200));
  EXPECT_EQ(specialize_to_projective(1u, 7), ChowClass::monomial(projective_table(1), {1}, 7));
}

TEST(SpecializeToProjective, MatchesPushforwardChernPolynomial) {
  for (unsigned n = 1; n <= 8; ++n) {
    AmbientRing ring(n);
    for (unsigned d = 1; d <= 10; ++d)
      EXPECT_EQ(specialize_to_projective(ring, d), pushforward_class(n, d)) << n << " " << d;
  }
}
