#include <gtest/gtest.h>

#include "g2roll/compact.hpp"
#include "g2roll/exact/sample.hpp"
#include "g2roll/rolling.hpp"

using namespace g2roll;

namespace {

// no slip (rho+1) xdot = w x x, no spin <w, x> = 0, with w read off gdot g^T
bool rolls(const RollingState& s, const RollingTangent& t) {
  Mat3 m = t.gdot * s.g.transpose();
  if (!(m + m.transpose()).is_zero()) return false;
  Vec3 w{m(2, 1), m(0, 2), m(1, 0)};
  Vec3 wx{w[1] * s.x[2] - w[2] * s.x[1], w[2] * s.x[0] - w[0] * s.x[2], w[0] * s.x[1] - w[1] * s.x[0]};
  Rational spin = w[0] * s.x[0] + w[1] * s.x[1] + w[2] * s.x[2];
  return spin.is_zero() && (s.ratio + 1) * t.xdot == wx;
}

RollingState random_state(Rng& rng, const Rational& ratio) { return {sample_so3(rng), sample_s2_off_poles(rng), ratio}; }

}  // namespace

TEST(Rolling, BaseStateExamples) {
  RollingState s = base_state(3);
  EXPECT_TRUE(is_rolling_tangent(s, {}));
  RollingTangent t = infinitesimal_action(s, Vec3::unit(0), Vec3{-3, 0, 0});
  EXPECT_TRUE(is_rolling_tangent(s, t));
  EXPECT_TRUE(rolls(s, t));
  RollingState s2 = base_state(2);
  RollingTangent t2 = infinitesimal_action(s2, Vec3::unit(0), Vec3{-3, 0, 0});
  EXPECT_FALSE(is_rolling_tangent(s2, t2));
  EXPECT_FALSE(rolls(s2, t2));
}

TEST(Rolling, PredicateAgreesWithHandOracle) {
  Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    Rational rho = rng.integer(0, 1) ? Rational(3) : Rational(2);
    RollingState s = random_state(rng, rho);
    RollingTangent v = infinitesimal_action(s, rng.vec3(), rng.vec3());
    EXPECT_EQ(is_rolling_tangent(s, v), rolls(s, v));
    RollingTangent r = rolling_tangent_from(s, rng.rational(), rng.rational());
    EXPECT_TRUE(rolls(s, r));
  }
}

TEST(Rolling, BasePlane) {
  EXPECT_TRUE(spans_equal(base_plane(3), {{1, 0, 0, -3, 0, 0}, {0, 1, 0, 0, -3, 0}}));
  EXPECT_TRUE(spans_equal(base_plane(Rational(1, 3)), {{3, 0, 0, -1, 0, 0}, {0, 3, 0, 0, -1, 0}}));
}

TEST(Rolling, InvariantUnderTheGroup) {
  Rng rng(2);
  for (const Rational& rho : {Rational(3), Rational(1, 3), Rational(2)})
    for (int t = 0; t < 20; ++t) {
      RollingState s = random_state(rng, rho);
      RollingTangent v = rolling_tangent_from(s, rng.rational(), rng.rational());
      Mat3 g1 = sample_so3(rng), g2 = sample_so3(rng);
      RollingState gs = group_action(g1, g2, s);
      gs.validate();
      EXPECT_TRUE(rolls(gs, push_tangent(g1, g2, v)));
    }
}

TEST(Rolling, SpanningFieldsAtE1) {
  auto [v1, v2] = spanning_fields(3);
  RollingState s{Mat3::identity(), Vec3::unit(0), 3};
  RollingTangent a = evaluate_field(v1, s);
  EXPECT_EQ(a.gdot, hat(Vec3::unit(1)));
  EXPECT_EQ(a.xdot, Rational(1, 4) * cross(Vec3::unit(1), Vec3::unit(0)));
  EXPECT_TRUE(rolls(s, a));
  EXPECT_TRUE(rolls(s, evaluate_field(v2, s)));
}

TEST(Rolling, GrowthVector) {
  Rng rng(3);
  for (const Rational& rho : {Rational(3), Rational(2), Rational(1, 3)})
    for (int t = 0; t < 10; ++t) EXPECT_EQ(growth_vector(rho, random_state(rng, rho)), (std::vector<std::size_t>{2, 3, 5}));
  auto g = growth_vector(1, random_state(rng, 1));
  EXPECT_LT(g.back(), 5u);
  EXPECT_EQ(g, (std::vector<std::size_t>{2, 2, 2}));
}

TEST(Rolling, DegeneratePointsRejected) {
  EXPECT_THROW(growth_vector(3, base_state(3)), DegeneratePoint);
  RollingState bad{Mat3::identity(), Vec3{1, 1, 0}, 3};
  EXPECT_THROW(bad.validate(), NotNormalized);
  RollingState neg{Mat3::identity(), Vec3::unit(0), -1};
  EXPECT_THROW(neg.validate(), BadParameters);
}

TEST(Rolling, DataComparedWithCompactModel) {
  CompactBasis cb = compact_basis(serre_structure(root_decomposition()).basis);
  EXPECT_TRUE(same_distribution_data(extract_data(3), compact_distribution_data(cb)));
  EXPECT_TRUE(same_distribution_data(extract_data(Rational(1, 3)), compact_distribution_data(cb, true)));
  EXPECT_FALSE(same_distribution_data(extract_data(2), compact_distribution_data(cb)));
  EXPECT_FALSE(same_distribution_data(extract_data(2), compact_distribution_data(cb, true)));
}
