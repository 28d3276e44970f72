#include <gtest/gtest.h>

#include "g2roll/compact.hpp"
#include "g2roll/exact/sample.hpp"
#include "g2roll/quadric.hpp"
#include "g2roll/rolling.hpp"

using namespace g2roll;

namespace {

const RootDatum& datum() {
  static const RootDatum rd = root_decomposition();
  return rd;
}

// q v q̄ on imaginary quaternions as a matrix; quadratic in q
Mat3 conj_map(const Quaternion& q) {
  Mat3 m;
  for (int c = 0; c < 3; ++c) {
    Vec3 v = (q * Quaternion::unit(c + 1) * q.conj()).im();
    for (int r = 0; r < 3; ++r) m(r, c) = v[r];
  }
  return m;
}

Matrix random_group_element(Rng& rng) {
  const auto& rd = datum();
  const auto& a = rd.roots[static_cast<std::size_t>(rng.integer(0, 11))];
  const auto& b = rd.roots[static_cast<std::size_t>(rng.integer(0, 11))];
  return exp_nilpotent(rng.nonzero_rational(3, 2) * a.vector) * exp_nilpotent(rng.nonzero_rational(3, 2) * b.vector);
}

}  // namespace

TEST(Quadric, ChainAtBasePoint) {
  auto c = annihilator_chain(quadric_base_point());
  EXPECT_EQ(c.dims(), (std::array<std::size_t, 5>{1, 3, 4, 6, 7}));
  EXPECT_TRUE(c.nested());
  EXPECT_TRUE(spans_equal(c.x0, {chart_a(basis_e(0)), chart_a(basis_f(1)), chart_a(basis_f(2))}));
}

TEST(Quadric, ChainAtRandomNullPoints) {
  Rng rng(1);
  const Matrix gram = inner_product_gram_chart_a();
  for (int t = 0; t < 20; ++t) {
    SplitOctonion x = sample_null(rng);
    ASSERT_EQ(inner_product(x, x), 0);
    auto c = annihilator_chain(x);
    EXPECT_EQ(c.dims(), (std::array<std::size_t, 5>{1, 3, 4, 6, 7}));
    EXPECT_TRUE(c.nested());
    for (const auto& y : c.x0) EXPECT_TRUE((x * from_chart_a(y)).is_zero());
    for (const auto& y : c.x0)
      for (const auto& z : c.x0) EXPECT_EQ(dot(y, gram * z), 0);
  }
  EXPECT_THROW(annihilator_chain(basis_U()), NotNull);
}

TEST(Quadric, IsotropyIsTheParabolic) {
  auto iso = isotropy_algebra(quadric_base_point());
  EXPECT_EQ(iso.size(), 9u);
  EXPECT_TRUE(spans_equal(to_vectors(iso), to_vectors(build_parabolic(datum()))));
}

TEST(Quadric, InfinitesimallyTransitive) {
  Rng rng(2);
  EXPECT_EQ(infinitesimal_transitivity(quadric_base_point()), 6u);
  for (int t = 0; t < 20; ++t) EXPECT_EQ(infinitesimal_transitivity(sample_null(rng)), 6u);
}

TEST(Quadric, DistributionCarriedByTheGroup) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    SplitOctonion x = sample_null(rng);
    EXPECT_EQ(quadric_distribution(x).rank(), 2u);
    EXPECT_TRUE(distribution_is_carried(random_group_element(rng), x));
  }
}

TEST(Quadric, PlaneDataAndGrowth) {
  auto w = quadric_plane_witness(datum());
  EXPECT_TRUE(w.spans_x0);
  EXPECT_TRUE(w.isotropy_fixes_line);
  EXPECT_EQ(w.multiples, (std::vector<Rational>{1, -1}));
  EXPECT_EQ(derived_flag(distribution_data_of_quadric(datum())), (std::vector<std::size_t>{2, 3, 5}));
}

TEST(Quadric, CoverDifferentialAgainstExactCentralDifference) {
  // q -> q v q̄ is quadratic, so (R(q+q') - R(q-q'))/2 is its exact derivative along q'
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    auto p = NormalizedNull::from(sample_normalized_null(rng));
    for (const auto& yv : annihilator(p.octonion())) {
      SplitOctonion y = from_chart_a(yv);
      Rational radial = dot(p.v.im(), y.a.im());
      Quaternion a = y.a - radial * p.v, b = y.b - radial * p.h;
      Quaternion q = p.v * p.h.conj();
      Quaternion qdot = a * p.h.conj() + p.v * b.conj();
      Mat3 gdot = Rational(1, 2) * (conj_map(q + qdot) - conj_map(q - qdot));
      Mat3 m = gdot * conj_map(q).transpose();
      ASSERT_TRUE((m + m.transpose()).is_zero());
      Vec3 omega = vee(m);
      Vec3 x = p.v.im(), xdot = a.im();
      EXPECT_TRUE(is_rolling_velocity(3, x, omega, xdot));
      auto d = covering_differential(p, y);
      EXPECT_EQ(d[0], omega);
      EXPECT_EQ(d[1], xdot);
    }
  }
}

TEST(Quadric, CoverRealizesRatioThree) {
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    auto p = NormalizedNull::from(sample_normalized_null(rng));
    EXPECT_TRUE(covering_matches_ratio(p, 3));
    for (const Rational& r : {Rational(1, 3), Rational(1), Rational(2), Rational(5)}) EXPECT_FALSE(covering_matches_ratio(p, r));
    auto rr = realized_ratio(p);
    ASSERT_TRUE(rr);
    EXPECT_EQ(*rr, 3);
    auto rh = realized_ratio(p, CoverRotation::h);
    EXPECT_FALSE(rh && (*rh == 3 || *rh == Rational(1, 3)));
  }
}

TEST(Quadric, CoverIsEquivariantAndTwoToOne) {
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    auto p = NormalizedNull::from(sample_normalized_null(rng));
    Quaternion q1 = sample_unit_quaternion(rng), q2 = sample_unit_quaternion(rng);
    RollingState lhs = covering_map(NormalizedNull::from(ktilde_action(q1, q2, p.octonion())), 3);
    RollingState rhs = group_action(rotation_of(q1), rotation_of(q2), covering_map(p, 3));
    EXPECT_EQ(lhs.g, rhs.g);
    EXPECT_EQ(lhs.x, rhs.x);
    RollingState flipped = covering_map(NormalizedNull{p.v, -p.h}, 3);
    EXPECT_EQ(flipped.g, covering_map(p, 3).g);
  }
  EXPECT_THROW(NormalizedNull::from(Rational(3) * basis_e(0)), NotNormalized);
}

TEST(Quadric, RotationDerivativeIdentity) {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    Quaternion q = sample_unit_quaternion(rng);
    EXPECT_TRUE(rotation_derivative_identity(q, Quaternion::imaginary(rng.vec3(3, 2)) * q));
  }
}

TEST(Quadric, FloatingResidualSeparatesRatios) {
  std::array<double, 3> v{0.6, 0.0, 0.8};
  std::array<double, 4> h{0.5, 0.5, 0.5, 0.5};
  EXPECT_LT(covering_residual_floating(v, h, 3.0), 1e-10);
  EXPECT_GT(covering_residual_floating(v, h, 2.0), 1e-6);
}
