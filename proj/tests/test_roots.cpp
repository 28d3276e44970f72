#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "g2roll/roots.hpp"

using namespace g2roll;

namespace {

const RootDatum& datum() {
  static const RootDatum rd = root_decomposition();
  return rd;
}

Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

TEST(Roots, TwelveRootsSixShortSixLong) {
  const auto& rd = datum();
  ASSERT_EQ(rd.roots.size(), 12u);
  // short roots ±t_i, long roots t_i − t_j
  std::set<Functional> shorts, longs;
  for (int i = 0; i < 3; ++i) {
    shorts.insert(Functional::t(i));
    shorts.insert(-Functional::t(i));
    for (int j = 0; j < 3; ++j)
      if (i != j) longs.insert(Functional::t(i) - Functional::t(j));
  }
  for (const auto& r : rd.roots) {
    if (r.is_long) {
      EXPECT_TRUE(longs.count(r.value)) << r.label;
    } else {
      EXPECT_TRUE(shorts.count(r.value)) << r.label;
    }
  }
  std::size_t n_long = std::count_if(rd.roots.begin(), rd.roots.end(), [](const Root& r) { return r.is_long; });
  EXPECT_EQ(n_long, 6u);
}

TEST(Roots, RootVectorsAreEigenvectorsAtMatrixLevel) {
  for (const auto& r : datum().roots)
    for (int i = 0; i < 3; ++i)
      EXPECT_EQ(comm(rho(cartan_generator(i)), rho(r.vector)), r.value.v[i] * rho(r.vector)) << r.label;
}

TEST(Roots, FirstWeightIsTwoMinusOneMinusOne) {
  auto wd = weight_decomposition();
  EXPECT_EQ(wd.weights[0].str(), "(2,-1,-1)");
  EXPECT_TRUE(wd.weights[6].is_zero());
  for (int i = 0; i < 3; ++i) EXPECT_EQ(wd.weights[3 + i], -wd.weights[i]);
}

TEST(Roots, LabelsFollowTheConvention) {
  const auto& rd = datum();
  EXPECT_EQ(rd.by_label("sigma1").value, Functional::t(2));
  EXPECT_EQ(rd.by_label("lambda1").value, Functional::t(0) - Functional::t(1));
  EXPECT_EQ(rd.by_label("-sigma2").value, Functional::t(1));
  EXPECT_THROW(rd.by_label("mu"), DecompositionFailure);
}

TEST(Roots, LongOverShortNormRatioIsThree) {
  const auto& rd = datum();
  Rational s = root_inner_product(rd.by_label("sigma2").value, rd.by_label("sigma2").value);
  Rational l = root_inner_product(rd.by_label("lambda3").value, rd.by_label("lambda3").value);
  EXPECT_EQ(l / s, 3);
}

TEST(Roots, LongRootsSpanSl3) {
  const auto& rd = datum();
  std::vector<Vector> sl3 = to_vectors(rd.cartan_basis);
  for (const auto& r : rd.roots)
    if (r.is_long) sl3.push_back(r.vector.to_vector());
  EXPECT_EQ(span_rank(sl3), 8u);
  for (const auto& r : rd.roots) {
    if (r.is_long) {
      EXPECT_FALSE(r.vector.A.is_zero());
    }
  }
}

TEST(Roots, NonRootSumsBracketToZero) {
  const auto& rd = datum();
  for (const auto& a : rd.roots)
    for (const auto& b : rd.roots) {
      Functional s = a.value + b.value;
      if (!s.is_zero() && !rd.by_value(s)) {
        EXPECT_TRUE(bracket(a.vector, b.vector).is_zero()) << a.label << " " << b.label;
      }
    }
}

TEST(Roots, ParabolicAndPlane) {
  const auto& rd = datum();
  auto p = build_parabolic(rd);
  EXPECT_EQ(span_rank(to_vectors(p)), 9u);
  // closed under bracket
  auto pv = to_vectors(p);
  for (const auto& a : p)
    for (const auto& b : p) EXPECT_TRUE(in_span(pv, bracket(a, b).to_vector()));
  auto d = parabolic_distribution_data(rd);
  EXPECT_TRUE(plane_is_invariant(d));
  EXPECT_EQ(derived_flag(d), (std::vector<std::size_t>{2, 3, 5}));
}

TEST(Roots, WeightShiftRule) { EXPECT_TRUE(weight_shift_rule_holds(datum(), weight_decomposition())); }

TEST(Roots, CharacteristicPolynomialAndRationalRoots) {
  // (x-1)(x-2)(x+3) = x^3 - 7x + 6
  Matrix m = Matrix::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, -3}});
  Vector c = characteristic_polynomial(m);
  for (const Rational& x : {Rational(1), Rational(2), Rational(-3)}) EXPECT_EQ(evaluate_polynomial(c, x), 0);
  auto r = rational_roots(c);
  std::sort(r.begin(), r.end());
  EXPECT_EQ(r, (std::vector<Rational>{-3, 1, 2}));
}
