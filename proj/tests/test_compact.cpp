#include <gtest/gtest.h>

#include "g2roll/compact.hpp"
#include "g2roll/exact/sample.hpp"
#include "g2roll/quadric.hpp"

using namespace g2roll;

namespace {

struct Fixture {
  SerreResult sr = serre_structure(root_decomposition());
  CompactBasis cb = compact_basis(sr.basis);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

// bracket on so3 + so3 written with cross products
Vector so3so3_oracle(const Vector& a, const Vector& b) {
  Vec3 a1 = Vec3::from(a, 0), a2 = Vec3::from(a, 3), b1 = Vec3::from(b, 0), b2 = Vec3::from(b, 3);
  Vec3 c1 = cross(a1, b1), c2 = cross(a2, b2);
  return {c1[0], c1[1], c1[2], c2[0], c2[1], c2[2]};
}

}  // namespace

TEST(Compact, Relations) {
  for (const auto& r : verify_compact_relations(fx().cb)) EXPECT_TRUE(r.holds) << r.name;
  const auto& cb = fx().cb;
  EXPECT_EQ(bracket(cb.S[0], cb.S[1]), Rational(3, 4) * cb.L[2] - cb.S[2]);
  EXPECT_EQ(bracket(cb.L[0], cb.L[1]), cb.L[2]);
}

TEST(Compact, IdealSplit) {
  for (const auto& r : verify_ideal_split(fx().cb)) EXPECT_TRUE(r.holds) << r.name;
}

TEST(Compact, QuadraticAndItsRoots) {
  auto q = derive_quadratic(fx().cb);
  EXPECT_EQ(q.p, Rational(3, 4));
  EXPECT_EQ(q.q, -1);
  ASSERT_EQ(q.roots.size(), 2u);
  for (const auto& x : q.roots) EXPECT_EQ(x * x + x - Rational(3, 4), 0);
  EXPECT_EQ(q.roots, (std::vector<Rational>{Rational(-3, 2), Rational(1, 2)}));
}

TEST(Compact, ChangeOfBasisIsAHomomorphism) {
  const auto& cb = fx().cb;
  std::vector<G2Element> k = {cb.L[0], cb.L[1], cb.L[2], cb.S[0], cb.S[1], cb.S[2]};
  for (bool swapped : {false, true})
    for (const auto& a : k)
      for (const auto& b : k)
        EXPECT_EQ(compact_to_so3so3(cb, bracket(a, b), swapped),
                  so3so3_oracle(compact_to_so3so3(cb, a, swapped), compact_to_so3so3(cb, b, swapped)));
  EXPECT_EQ(so3so3_bracket({1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}), so3so3_oracle({1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}));
}

TEST(Compact, RatioThree) {
  const auto& cb = fx().cb;
  auto d = compact_distribution_data(cb);
  auto ds = compact_distribution_data(cb, true);
  for (const auto& w : d.plane) {
    EXPECT_TRUE(satisfies_plane_equations(w, 3));
    for (const Rational& r : {Rational(1), Rational(2), Rational(5), Rational(1, 2)}) EXPECT_FALSE(satisfies_plane_equations(w, r));
    ASSERT_TRUE(ratio_of(w));
    EXPECT_EQ(*ratio_of(w), 3);
  }
  for (const auto& w : ds.plane) EXPECT_TRUE(satisfies_plane_equations(w, Rational(1, 3)));
}

TEST(Compact, PlaneEquationsByHand) {
  // (w', w'') with w'_3 = w''_3 = 0 and rho w' + w'' = 0
  EXPECT_TRUE(satisfies_plane_equations({1, 2, 0, -3, -6, 0}, 3));
  EXPECT_FALSE(satisfies_plane_equations({1, 2, 1, -3, -6, -3}, 3));
  EXPECT_FALSE(ratio_of({1, 1, 0, -3, -2, 0}));
}

TEST(Compact, GrowthOfTheCompactModel) {
  EXPECT_EQ(derived_flag(compact_distribution_data(fx().cb)), (std::vector<std::size_t>{2, 3, 5}));
}

TEST(Compact, WeylBasisRecord) {
  auto rec = weyl_basis_record(fx().sr.basis, fx().cb);
  EXPECT_TRUE(rec.involution_is_automorphism);
  EXPECT_TRUE(rec.fixed_set_is_compact);
}

TEST(Compact, KtildeActsByAutomorphisms) {
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    Quaternion q1 = sample_unit_quaternion(rng), q2 = sample_unit_quaternion(rng);
    SplitOctonion x = from_chart_a(rng.vector(7)), y = from_chart_a(rng.vector(7));
    auto act = [&](const SplitOctonion& v) { return ktilde_action(q1, q2, v); };
    SplitOctonion xy = x * y;
    SplitOctonion im = from_chart_a(to_chart_a(xy).first);
    EXPECT_EQ(act(x) * act(y), act(im) + SplitOctonion::real(xy.re()));
    EXPECT_EQ(inner_product(act(x), act(y)), inner_product(x, y));
  }
}

TEST(Compact, PrintedActionIsNotAnAutomorphism) {
  Rng rng(5);
  bool fails = false;
  for (int t = 0; t < 10 && !fails; ++t) {
    Quaternion q1 = sample_unit_quaternion(rng), q2 = sample_unit_quaternion(rng);
    SplitOctonion x = from_chart_a(rng.vector(7)), y = from_chart_a(rng.vector(7));
    auto act = [&](const SplitOctonion& v) { return ktilde_action_as_printed(q1, q2, v); };
    SplitOctonion xy = x * y;
    if (act(x) * act(y) != act(from_chart_a(to_chart_a(xy).first)) + SplitOctonion::real(xy.re())) fails = true;
  }
  EXPECT_TRUE(fails);
}

TEST(Compact, KernelOfTheAction) {
  EXPECT_EQ(ktilde_kernel_among_signs(), (std::vector<std::pair<int, int>>{{1, 1}, {-1, -1}}));
  EXPECT_EQ(ktilde_infinitesimal_rank(), 6u);
  EXPECT_EQ(ktilde_matrix(Quaternion::real(-1), Quaternion::real(-1)), Matrix::identity(7));
  EXPECT_THROW(ktilde_action(Quaternion::real(2), Quaternion::real(1), basis_U()), NotUnit);
}

TEST(Compact, InvolutionsPreserveTheDistribution) {
  Matrix sigma = sigma_involution();
  EXPECT_EQ(sigma * sigma, Matrix::identity(7));
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    SplitOctonion x = sample_null(rng);
    EXPECT_TRUE(involution_preserves_distribution(sigma, x));
    EXPECT_TRUE(involution_preserves_distribution(Rational(-1) * Matrix::identity(7), x));
  }
}
