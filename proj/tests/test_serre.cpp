#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "g2roll/serre.hpp"

using namespace g2roll;

namespace {

const SerreResult& result() {
  static const SerreResult sr = serre_structure(root_decomposition());
  return sr;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

// c with [a,b] = c * target, computed straight from the bracket
Rational constant(const SerreBasis& s, const std::string& a, const std::string& b, const std::string& target) {
  auto k = proportionality(bracket(s.get(a), s.get(b)).to_vector(), s.get(target).to_vector());
  EXPECT_TRUE(k.has_value()) << a << "," << b;
  return k.value_or(Rational(999));
}

}  // namespace

TEST(Serre, ConstantsMatchGoldenFile) {
  EXPECT_EQ(format_constants_text(result().table), read_file(std::string(G2ROLL_GOLDEN_DIR) + "/constants.txt"));
}

TEST(Serre, TableAgreesWithPrintedValues) {
  EXPECT_EQ(table_difference(result().table, expected_structure_constants()), "");
  EXPECT_FALSE(result().involution_applied);
}

TEST(Serre, SelectedEntriesFromBrackets) {
  const auto& s = result().basis;
  EXPECT_EQ(bracket(s.xs[0], s.xs[1]), s.Xs[2]);
  const auto& t = result().table;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i == j || t.c[i][j].is_zero()) continue;
      const auto& a = SerreBasis::kPositive[i];
      const auto& b = SerreBasis::kNegative[j];
      auto name = root_vector_name(s, eigen_functional(s.get(a)) + eigen_functional(s.get(b)));
      ASSERT_TRUE(name) << a << b;
      EXPECT_EQ(constant(s, a, b, *name), t.c[i][j]) << a << "," << b;
    }
}

TEST(Serre, DiagonalExpansions) {
  const auto& s = result().basis;
  auto lin = [&](int a, int b) { return Rational(a) * s.h + Rational(b) * s.H; };
  EXPECT_EQ(bracket(s.xs[0], s.ys[0]), lin(8, 12));
  EXPECT_EQ(bracket(s.xs[1], s.ys[1]), lin(1, 3));
  EXPECT_EQ(bracket(s.xs[2], s.ys[2]), lin(1, 0));
  EXPECT_EQ(bracket(s.Xs[0], s.Ys[0]), lin(0, 1));
  EXPECT_EQ(bracket(s.Xs[1], s.Ys[1]), lin(36, 36));
  EXPECT_EQ(bracket(s.Xs[2], s.Ys[2]), lin(36, 72));
}

TEST(Serre, GeneratorRelations) {
  const auto& s = result().basis;
  EXPECT_EQ(bracket(s.x, s.y), s.h);
  EXPECT_EQ(bracket(s.X, s.Y), s.H);
  EXPECT_TRUE(bracket(s.x, s.Y).is_zero());
  EXPECT_TRUE(bracket(s.X, s.y).is_zero());
  // Cartan matrix of g2: <alpha, beta> entries 2, -1, -3
  EXPECT_EQ(bracket(s.h, s.x), Rational(2) * s.x);
  EXPECT_EQ(bracket(s.H, s.X), Rational(2) * s.X);
  EXPECT_EQ(bracket(s.h, s.X), Rational(-3) * s.X);
  EXPECT_EQ(bracket(s.H, s.x), Rational(-1) * s.x);
  for (const auto& rel : serre_relations(s)) EXPECT_TRUE(rel.holds) << rel.name;
  EXPECT_TRUE(ad_power(s.X, s.x, 2).is_zero());
  EXPECT_TRUE(ad_power(s.x, s.X, 4).is_zero());
  EXPECT_FALSE(ad_power(s.x, s.X, 3).is_zero());
}

TEST(Serre, Symmetries) {
  EXPECT_TRUE(negation_symmetry_holds(result().basis));
  EXPECT_TRUE(swap_symmetry_holds(result().basis));
}

TEST(Serre, EigentablesAreThoseOfTheCartanElements) {
  const auto& s = result().basis;
  EXPECT_TRUE(eigentables_match(eigentable(s, s.h), expected_eigentable_h()));
  EXPECT_TRUE(eigentables_match(eigentable(s, s.H), expected_eigentable_H()));
  // x and X are nilpotent, so ad(x), ad(X) have no nonzero eigenvalues
  EXPECT_TRUE(ad_matrix(s.x, g2_basis()).pow(7).is_zero());
  EXPECT_TRUE(ad_matrix(s.X, g2_basis()).pow(7).is_zero());
}

TEST(Serre, OtherRenderings) {
  std::string latex = format_constants_latex(result().table);
  EXPECT_NE(latex.find("x_1&1&4&-4&0&12&-12"), std::string::npos);
  EXPECT_NE(latex.find("H_3=36h + 72H"), std::string::npos);
}
