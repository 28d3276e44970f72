#include <gtest/gtest.h>

#include "g2roll/exact/sample.hpp"
#include "g2roll/g2.hpp"
#include "g2roll/octonion.hpp"

using namespace g2roll;

namespace {

G2Element random_element(Rng& rng) { return {rng.traceless(3, 2), rng.vec3(3, 2), rng.vec3(3, 2)}; }

// 7x7 matrix of rho assembled entry by entry from the block description.
Matrix rho_oracle(const G2Element& u) {
  Matrix m(7, 7);
  auto eps = [](int i, int j, int k) { return Rational((i - j) * (j - k) * (k - i) / 2); };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(i, j) = u.A(i, j);
      m(3 + i, 3 + j) = -u.A(j, i);
      Rational rc, rb;
      for (int k = 0; k < 3; ++k) {
        rc = rc - eps(i, j, k) * u.c[k];
        rb = rb - eps(i, j, k) * u.b[k];
      }
      m(i, 3 + j) = rc;
      m(3 + i, j) = -rb;
    }
    m(i, 6) = 2 * u.b[i];
    m(3 + i, 6) = -2 * u.c[i];
    m(6, i) = u.c[i];
    m(6, 3 + i) = -u.b[i];
  }
  return m;
}

}  // namespace

TEST(G2, RhoMatchesBlockOracle) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    G2Element u = random_element(rng);
    EXPECT_EQ(rho(u), rho_oracle(u));
  }
}

TEST(G2, RejectsTracefulA) { EXPECT_THROW(rho(Mat3::identity(), {}, {}), NonTraceless); }

TEST(G2, BasisSpansFourteenDimensions) {
  std::vector<Vector> flat;
  for (const auto& u : g2_basis()) flat.push_back(rho(u).flat());
  EXPECT_EQ(flat.size(), 14u);
  EXPECT_EQ(span_rank(flat), 14u);
}

TEST(G2, CartanOperatorsHaveOneRelation) {
  auto ops = cartan_operators();
  ASSERT_EQ(ops.size(), 15u);
  std::vector<Vector> cols;
  for (const auto& op : ops) cols.push_back(op.matrix.flat());
  EXPECT_EQ(span_rank(cols), 14u);
  Matrix sum = cartan_X(0, 0) + cartan_X(1, 1) + cartan_X(2, 2);
  EXPECT_TRUE(sum.is_zero());
  auto rel = kernel_basis(Matrix::from_columns(cols, 49));
  EXPECT_EQ(rel.size(), 1u);
}

TEST(G2, RhoExpandsInCartanOperators) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    G2Element u = random_element(rng);
    EXPECT_EQ(rho(u), cartan_expansion(u));
  }
}

TEST(G2, ClosedFormBracketAgreesWithCommutator) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    G2Element u = random_element(rng), v = random_element(rng);
    G2Element w = bracket(u, v);
    EXPECT_EQ(rho(w), rho(u) * rho(v) - rho(v) * rho(u));
    EXPECT_EQ(bracket(v, u), -w);
  }
}

TEST(G2, Jacobi) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    G2Element a = random_element(rng), b = random_element(rng), c = random_element(rng);
    EXPECT_TRUE((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
  }
}

TEST(G2, PreservesJ) {
  Matrix g = j_gram();
  for (const auto& u : g2_basis()) {
    Matrix m = rho(u);
    EXPECT_TRUE((m.transpose() * g + g * m).is_zero());
    EXPECT_TRUE(is_J_antisymmetric(m));
  }
  EXPECT_FALSE(is_J_antisymmetric(Matrix::identity(7)));
}

TEST(G2, DerivationOfTheProduct) {
  // rho(u) acting on Cartan coordinates is a derivation of the imaginary product and kills the real part
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    G2Element u = random_element(rng);
    Matrix m = rho(u);
    CartanPoint p = CartanPoint::from(rng.vector(7)), q = CartanPoint::from(rng.vector(7));
    auto [im, re] = to_cartan(to_octonion(p) * to_octonion(q));
    CartanPoint mp = CartanPoint::from(m * p.to_vector()), mq = CartanPoint::from(m * q.to_vector());
    auto [a, ra] = to_cartan(to_octonion(mp) * to_octonion(q));
    auto [b, rb] = to_cartan(to_octonion(p) * to_octonion(mq));
    EXPECT_EQ(m * im.to_vector(), a.to_vector() + b.to_vector());
    EXPECT_EQ(ra + rb, 0);
  }
}

TEST(G2, ExponentialIsAutomorphism) {
  Rng rng(6);
  std::vector<G2Element> nilpotent = {g2_from_b(Vec3::unit(0)), g2_from_c(Vec3{1, 2, 0}),
                                      g2_from_A(Mat3::unit(0, 1)), g2_from_A(Mat3::unit(2, 0))};
  for (const auto& u : nilpotent) {
    Matrix g = exp_nilpotent(u);
    for (int t = 0; t < 5; ++t) {
      CartanPoint p = CartanPoint::from(rng.vector(7)), q = CartanPoint::from(rng.vector(7));
      CartanPoint gp = apply(g, p), gq = apply(g, q);
      EXPECT_EQ(J(gp), J(p));
      auto [im, re] = cartan_coordinate_product(p, q);
      auto [im2, re2] = cartan_coordinate_product(gp, gq);
      EXPECT_EQ(im2.to_vector(), g * im.to_vector());
      EXPECT_EQ(re2, re);
    }
  }
  EXPECT_THROW(exp_nilpotent(G2Element{Mat3::diag(1, -1, 0), {}, {}}), NotNilpotent);
}

TEST(G2, TorusScalesWeightVectors) {
  Matrix t = torus_element(2, Rational(1, 3));
  EXPECT_EQ(t * t.inverse(), Matrix::identity(7));
  EXPECT_EQ(t(6, 6), 1);
}
