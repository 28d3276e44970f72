#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "g2roll/exact/sample.hpp"
#include "g2roll/exact/matrix.hpp"
#include "g2roll/octonion.hpp"

using namespace g2roll;

namespace {

using Q = std::array<Rational, 4>;

// Hamilton product from the unit table: ij = k, jk = i, ki = j, squares -1.
Q qmul(const Q& a, const Q& b) {
  // sign[m][n] and index[m][n] of unit_m * unit_n
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  Q out{};
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) out[idx[m][n]] = out[idx[m][n]] + Rational(sgn[m][n]) * a[m] * b[n];
  return out;
}

Q qconj(const Q& a) { return {a[0], -a[1], -a[2], -a[3]}; }
Q qadd(const Q& a, const Q& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

// (a,b)(c,d) = (ac + d̄b, da + bc̄)
std::array<Rational, 8> omul(const std::array<Rational, 8>& x, const std::array<Rational, 8>& y) {
  Q a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]}, c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  Q p = qadd(qmul(a, c), qmul(qconj(d), b));
  Q q = qadd(qmul(d, a), qmul(b, qconj(c)));
  return {p[0], p[1], p[2], p[3], q[0], q[1], q[2], q[3]};
}

std::array<Rational, 8> raw(const SplitOctonion& x) {
  auto v = x.to_vector();
  std::array<Rational, 8> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

SplitOctonion random_octonion(Rng& rng) {
  Vector v = rng.vector(8);
  return {{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]}};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Octonions, ProductMatchesIndependentCayleyDickson) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    SplitOctonion x = random_octonion(rng), y = random_octonion(rng);
    EXPECT_EQ(raw(x * y), omul(raw(x), raw(y)));
  }
}

TEST(Octonions, TableMatchesGoldenFile) {
  std::string got = format_multiplication_table(basis_multiplication_table());
  EXPECT_EQ(got, read_file(std::string(G2ROLL_GOLDEN_DIR) + "/octonion_table.txt"));
}

TEST(Octonions, TableExamples) {
  auto e = [](int i) { return basis_e(i); };
  auto f = [](int i) { return basis_f(i); };
  EXPECT_EQ(e(0) * e(1), f(2));
  EXPECT_EQ(e(1) * e(0), -f(2));
  EXPECT_EQ(f(0) * f(1), e(2));
  EXPECT_EQ(e(0) * f(0), Rational(-1, 2) * SplitOctonion::one() + Rational(1, 2) * basis_U());
  EXPECT_EQ(f(0) * e(0), Rational(-1, 2) * SplitOctonion::one() - Rational(1, 2) * basis_U());
  EXPECT_EQ(e(2) * basis_U(), e(2));
  EXPECT_EQ(f(2) * basis_U(), -f(2));
  EXPECT_TRUE((e(1) * e(1)).is_zero());
  EXPECT_TRUE((e(0) * f(1)).is_zero());
}

TEST(Octonions, AlternativeButNotAssociative) {
  Rng rng(2);
  bool nonassociative = false;
  for (int t = 0; t < 100; ++t) {
    SplitOctonion x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
    EXPECT_EQ(x * (x * y), (x * x) * y);
    EXPECT_EQ((y * x) * x, y * (x * x));
    if ((x * y) * z != x * (y * z)) nonassociative = true;
  }
  EXPECT_TRUE(nonassociative);
}

TEST(Octonions, CompositionLaw) {
  Rng rng(3);
  auto N = [](const SplitOctonion& x) { return (x * x.conj()).re(); };
  for (int t = 0; t < 100; ++t) {
    SplitOctonion x = random_octonion(rng), y = random_octonion(rng);
    EXPECT_EQ(N(x * y), N(x) * N(y));
    // norm is |a|^2 - |b|^2 computed directly
    EXPECT_EQ(N(x), x.a.norm2() - x.b.norm2());
  }
}

TEST(Octonions, ConjugateReversesProducts) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    SplitOctonion x = random_octonion(rng), y = random_octonion(rng);
    EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
  }
}

TEST(Octonions, SignsOfNormAndSquare) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    SplitOctonion x = random_octonion(rng);
    EXPECT_EQ(x * x.conj(), SplitOctonion::real(inner_product(x, x)));
    SplitOctonion v = from_chart_a(rng.vector(7));
    EXPECT_EQ(v * v, SplitOctonion::real(-inner_product(v, v)));
    EXPECT_EQ(inner_product(v, v), v.a.norm2() - v.b.norm2());
  }
}

TEST(Octonions, NullBasisAndSignature) {
  EXPECT_EQ(inner_product(basis_U(), basis_U()), -1);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(inner_product(basis_e(i), basis_e(i)), 0);
    EXPECT_EQ(inner_product(basis_f(i), basis_f(i)), 0);
  }
  Inertia in = inertia(inner_product_gram_chart_a());
  EXPECT_EQ(in.positive, 3u);
  EXPECT_EQ(in.negative, 4u);
  EXPECT_EQ(in.zero, 0u);
}

TEST(Octonions, ChartsRoundTrip) {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    Vector a = rng.vector(7);
    EXPECT_EQ(to_chart_a(from_chart_a(a)).first, a);
    EXPECT_EQ(chart_b_to_a(chart_a_to_b(a)), a);
    Vector b = chart_a_to_b(a);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(b[i], -a[i]);
  }
}

TEST(Octonions, CartanCoordinates) {
  EXPECT_EQ(J(CartanPoint::from({1, 0, 0, 0, 0, 0, 0})), 0);
  EXPECT_EQ(J(CartanPoint::from({1, 0, 0, 1, 0, 0, 0})), 1);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    CartanPoint p = CartanPoint::from(rng.vector(7)), q = CartanPoint::from(rng.vector(7));
    SplitOctonion x = to_octonion(p), y = to_octonion(q);
    EXPECT_EQ(J(p), -inner_product(x, x));
    // closed-form coordinates of the product, spelled out here
    Vec3 im_x = -cross(p.y, q.y) - p.z * q.x + q.z * p.x;
    Vec3 im_y = cross(p.x, q.x) + p.z * q.y - q.z * p.y;
    Rational im_z = Rational(1, 2) * (dot(q.x, p.y) - dot(p.x, q.y));
    Rational re = p.z * q.z + Rational(1, 2) * (dot(p.x, q.y) + dot(q.x, p.y));
    auto [im, r] = to_cartan(x * y);
    EXPECT_EQ(im.x, im_x);
    EXPECT_EQ(im.y, im_y);
    EXPECT_EQ(im.z, im_z);
    EXPECT_EQ(r, re);
    auto [sq, sr] = cartan_coordinate_product(p, p);
    EXPECT_TRUE(sq.is_zero());
    EXPECT_EQ(sr, J(p));
  }
}

TEST(Octonions, RejectsWrongCoordinateCount) {
  EXPECT_THROW(from_chart_a({1, 2, 3}), DimensionMismatch);
  EXPECT_THROW(CartanPoint::from({1, 2}), DimensionMismatch);
}
