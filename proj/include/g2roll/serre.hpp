#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2roll/error.hpp"
#include "g2roll/g2.hpp"
#include "g2roll/roots.hpp"

namespace g2roll {

struct SerreBasis {
  G2Element x, y, h, X, Y, H;
  std::array<G2Element, 3> xs, ys, Xs, Ys;  // x₁..x₃ etc.

  static inline const std::array<std::string, 6> kPositive = {"x1", "x2", "x3", "X1", "X2", "X3"};
  static inline const std::array<std::string, 6> kNegative = {"y1", "y2", "y3", "Y1", "Y2", "Y3"};

  std::vector<G2Element> positive() const { return {xs[0], xs[1], xs[2], Xs[0], Xs[1], Xs[2]}; }
  std::vector<G2Element> negative() const { return {ys[0], ys[1], ys[2], Ys[0], Ys[1], Ys[2]}; }

  /// The twelve root vectors followed by h, H.
  std::vector<std::pair<std::string, G2Element>> named() const {
    std::vector<std::pair<std::string, G2Element>> out;
    auto p = positive(), n = negative();
    for (int i = 0; i < 6; ++i) out.push_back({kPositive[i], p[i]});
    for (int i = 0; i < 6; ++i) out.push_back({kNegative[i], n[i]});
    out.push_back({"h", h});
    out.push_back({"H", H});
    return out;
  }

  const G2Element& get(const std::string& name) const {
    static const std::array<std::string, 3> idx = {"1", "2", "3"};
    for (int i = 0; i < 3; ++i) {
      if (name == "x" + idx[i]) return xs[i];
      if (name == "y" + idx[i]) return ys[i];
      if (name == "X" + idx[i]) return Xs[i];
      if (name == "Y" + idx[i]) return Ys[i];
    }
    if (name == "x") return x;
    if (name == "y") return y;
    if (name == "h") return h;
    if (name == "X") return X;
    if (name == "Y") return Y;
    if (name == "H") return H;
    throw DimensionMismatch("unknown basis element " + name);
  }
};

/// Name of the opposite root vector: x_i ↔ y_i, X_i ↔ Y_i.
inline std::string opposite_name(const std::string& n) {
  char c = n[0];
  char o = c == 'x' ? 'y' : c == 'y' ? 'x' : c == 'X' ? 'Y' : 'X';
  return std::string(1, o) + n.substr(1);
}

namespace detail {
inline Rational scale_factor(const G2Element& image, const G2Element& v) {
  auto k = proportionality(image.to_vector(), v.to_vector());
  if (!k || k->is_zero()) throw NoSolution("generator is not an eigenvector of its coroot");
  return *k;
}
}  // namespace detail

/// x in the σ₃ root space, X in the adjacent long simple root space λ₁, y and Y opposite,
/// scaled so that [h,x] = 2x and [H,X] = 2X.
inline SerreBasis find_serre_generators(const RootDatum& rd) {
  SerreBasis s;
  s.x = rd.by_label("sigma3").vector;
  s.X = rd.by_label("lambda1").vector;
  G2Element y0 = rd.by_label("-sigma3").vector;
  G2Element Y0 = rd.by_label("-lambda1").vector;

  G2Element h0 = bracket(s.x, y0);
  s.y = (Rational(2) / detail::scale_factor(bracket(h0, s.x), s.x)) * y0;
  s.h = bracket(s.x, s.y);
  G2Element H0 = bracket(s.X, Y0);
  s.Y = (Rational(2) / detail::scale_factor(bracket(H0, s.X), s.X)) * Y0;
  s.H = bracket(s.X, s.Y);

  // adjacency: [h,X] = −3X selects the long simple root next to x
  if (detail::scale_factor(bracket(s.h, s.X), s.X) != -3) throw NoSolution("x and X are not adjacent simple roots");
  return s;
}

/// x_2 = [x,X_1], x_1 = [x,x_2], X_2 = [x,x_1], X_3 = [X_1,X_2] and the y/Y mirror with signs.
inline SerreBasis build_recursive_basis(SerreBasis s) {
  s.xs[2] = s.x;
  s.Xs[0] = s.X;
  s.xs[1] = bracket(s.x, s.Xs[0]);
  s.xs[0] = bracket(s.x, s.xs[1]);
  s.Xs[1] = bracket(s.x, s.xs[0]);
  s.Xs[2] = bracket(s.Xs[0], s.Xs[1]);
  s.ys[2] = s.y;
  s.Ys[0] = s.Y;
  s.ys[1] = -bracket(s.y, s.Ys[0]);
  s.ys[0] = -bracket(s.y, s.ys[1]);
  s.Ys[1] = -bracket(s.y, s.ys[0]);
  s.Ys[2] = -bracket(s.Ys[0], s.Ys[1]);
  return s;
}

/// x ↦ −x, y ↦ −y; an automorphism fixing h, X, Y, H.
inline SerreBasis apply_involution(const SerreBasis& s) {
  SerreBasis t = s;
  t.x = -s.x;
  t.y = -s.y;
  return build_recursive_basis(t);
}

// ---------------------------------------------------------------------------

struct SerreRelation {
  std::string name;
  bool holds;
};

inline bool is_multiple(const G2Element& lhs, const G2Element& rhs, const Rational& k) { return lhs == k * rhs; }

inline G2Element ad_power(const G2Element& a, const G2Element& b, int n) {
  G2Element r = b;
  for (int k = 0; k < n; ++k) r = bracket(a, r);
  return r;
}

/// Every defining relation, plus [ad(Y)]²y = 0 next to the printed [ad(Y)]²x = 0.
inline std::vector<SerreRelation> serre_relations(const SerreBasis& s) {
  auto br = [](const G2Element& a, const G2Element& b) { return bracket(a, b); };
  return {
      {"[x,y]=h", br(s.x, s.y) == s.h},
      {"[h,x]=2x", is_multiple(br(s.h, s.x), s.x, 2)},
      {"[h,y]=-2y", is_multiple(br(s.h, s.y), s.y, -2)},
      {"[X,Y]=H", br(s.X, s.Y) == s.H},
      {"[H,X]=2X", is_multiple(br(s.H, s.X), s.X, 2)},
      {"[H,Y]=-2Y", is_multiple(br(s.H, s.Y), s.Y, -2)},
      {"[h,X]=-3X", is_multiple(br(s.h, s.X), s.X, -3)},
      {"[h,Y]=3Y", is_multiple(br(s.h, s.Y), s.Y, 3)},
      {"[H,x]=-x", is_multiple(br(s.H, s.x), s.x, -1)},
      {"[H,y]=y", is_multiple(br(s.H, s.y), s.y, 1)},
      {"[x,Y]=0", br(s.x, s.Y).is_zero()},
      {"[X,y]=0", br(s.X, s.y).is_zero()},
      {"[h,H]=0", br(s.h, s.H).is_zero()},
      {"ad(x)^4 X=0", ad_power(s.x, s.X, 4).is_zero()},
      {"ad(X)^2 x=0", ad_power(s.X, s.x, 2).is_zero()},
      {"ad(y)^4 Y=0", ad_power(s.y, s.Y, 4).is_zero()},
      {"ad(Y)^2 x=0", ad_power(s.Y, s.x, 2).is_zero()},
      {"ad(Y)^2 y=0", ad_power(s.Y, s.y, 2).is_zero()},
  };
}

// ---------------------------------------------------------------------------

/// c·h + d·H
struct CartanExpansion {
  Rational h, H;
  friend bool operator==(const CartanExpansion&, const CartanExpansion&) = default;

  std::string str() const {
    std::string s;
    auto term = [&s](const Rational& c, const char* name) {
      if (c.is_zero()) return;
      if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) s += "-";
      Rational a = abs(c);
      s += (a == 1 ? std::string() : a.str()) + name;
    };
    term(h, "h");
    term(H, "H");
    return s.empty() ? "0" : s;
  }
};

struct StructureConstantTable {
  /// [positive_i, negative_j] = c · (root vector of the sum); diagonal entries are 1 by convention.
  std::array<std::array<Rational, 6>, 6> c;
  /// h₁, h₂, h₃, H₁, H₂, H₃ = [x_i, y_i], [X_i, Y_i] in terms of h, H.
  std::array<CartanExpansion, 6> diagonal;
  /// [x₁, x₂] = k X₃
  Rational x1x2;

  friend bool operator==(const StructureConstantTable&, const StructureConstantTable&) = default;
};

inline std::optional<CartanExpansion> cartan_expansion_of(const SerreBasis& s, const G2Element& v) {
  auto coords = coordinates_in({s.h.to_vector(), s.H.to_vector()}, v.to_vector());
  if (!coords) return std::nullopt;
  return CartanExpansion{(*coords)[0], (*coords)[1]};
}

/// The root vector (by name) spanning the root space of `value`, if any.
inline std::optional<std::string> root_vector_name(const SerreBasis& s, const Functional& value) {
  for (const auto& [name, v] : s.named()) {
    if (name == "h" || name == "H") continue;
    if (eigen_functional(v) == value) return name;
  }
  return std::nullopt;
}

/// c_{α,β} with [E_α, E_β] = c_{α,β} E_{α+β}; nullopt when α+β is zero or not a root.
inline std::optional<Rational> structure_constant(const SerreBasis& s, const std::string& a, const std::string& b) {
  const G2Element& ea = s.get(a);
  const G2Element& eb = s.get(b);
  const Functional sum = eigen_functional(ea) + eigen_functional(eb);
  if (sum.is_zero()) return std::nullopt;
  auto target = root_vector_name(s, sum);
  G2Element r = bracket(ea, eb);
  if (!target) {
    if (!r.is_zero()) throw TableMismatch("[" + a + "," + b + "] should vanish");
    return std::nullopt;
  }
  auto k = proportionality(r.to_vector(), s.get(*target).to_vector());
  if (!k) throw TableMismatch("[" + a + "," + b + "] is not a multiple of " + *target);
  return k;
}

inline StructureConstantTable compute_structure_constants(const SerreBasis& s) {
  StructureConstantTable t;
  auto pos = s.positive(), neg = s.negative();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const auto& a = SerreBasis::kPositive[i];
      const auto& b = SerreBasis::kNegative[j];
      if (i == j) {
        auto e = cartan_expansion_of(s, bracket(pos[i], neg[j]));
        if (!e) throw TableMismatch("[" + a + "," + b + "] is not in the Cartan subalgebra");
        t.diagonal[i] = *e;
        t.c[i][j] = 1;
        continue;
      }
      auto k = structure_constant(s, a, b);
      t.c[i][j] = k.value_or(Rational(0));
    }
  auto k = proportionality(bracket(s.xs[0], s.xs[1]).to_vector(), s.Xs[2].to_vector());
  t.x1x2 = k.value_or(Rational(0));
  return t;
}

inline StructureConstantTable expected_structure_constants() {
  StructureConstantTable t;
  const int rows[6][6] = {{1, 4, -4, 0, 12, -12}, {4, 1, -3, 1, 0, 3},   {-4, -3, 1, 0, -3, 0},
                          {0, 1, 0, 1, 0, -1},    {12, 0, -3, 0, 1, 36}, {-12, 3, 0, -1, 36, 1}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t.c[i][j] = rows[i][j];
  t.diagonal = {CartanExpansion{8, 12}, CartanExpansion{1, 3},  CartanExpansion{1, 0},
                CartanExpansion{0, 1},  CartanExpansion{36, 36}, CartanExpansion{36, 72}};
  t.x1x2 = 1;
  return t;
}

/// Describes the first disagreement between two tables, or returns an empty string.
inline std::string table_difference(const StructureConstantTable& got, const StructureConstantTable& want) {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (got.c[i][j] != want.c[i][j])
        return "[" + SerreBasis::kPositive[i] + "][" + SerreBasis::kNegative[j] + "] = " + got.c[i][j].str() +
               ", expected " + want.c[i][j].str();
  static const std::array<std::string, 6> dn = {"h1", "h2", "h3", "H1", "H2", "H3"};
  for (int i = 0; i < 6; ++i)
    if (got.diagonal[i] != want.diagonal[i])
      return dn[i] + " = " + got.diagonal[i].str() + ", expected " + want.diagonal[i].str();
  if (got.x1x2 != want.x1x2) return "[x1,x2] = " + got.x1x2.str() + " X3, expected " + want.x1x2.str() + " X3";
  return {};
}

/// Generators, completed basis, and table; applies the x ↦ −x involution if the first attempt disagrees.
struct SerreResult {
  SerreBasis basis;
  StructureConstantTable table;
  bool involution_applied = false;
};

inline SerreResult serre_structure(const RootDatum& rd) {
  SerreResult r;
  r.basis = build_recursive_basis(find_serre_generators(rd));
  r.table = compute_structure_constants(r.basis);
  const auto want = expected_structure_constants();
  if (!table_difference(r.table, want).empty()) {
    r.basis = apply_involution(r.basis);
    r.table = compute_structure_constants(r.basis);
    r.involution_applied = true;
  }
  if (auto diff = table_difference(r.table, want); !diff.empty()) throw TableMismatch(diff);
  return r;
}

/// c_{−α,−β} = −c_{α,β} over all pairs of root vectors whose roots sum to a root.
inline bool negation_symmetry_holds(const SerreBasis& s) {
  std::vector<std::string> names(SerreBasis::kPositive.begin(), SerreBasis::kPositive.end());
  names.insert(names.end(), SerreBasis::kNegative.begin(), SerreBasis::kNegative.end());
  for (const auto& a : names)
    for (const auto& b : names) {
      auto c1 = structure_constant(s, a, b);
      auto c2 = structure_constant(s, opposite_name(a), opposite_name(b));
      if (c1.has_value() != c2.has_value()) return false;
      if (c1 && *c2 != -*c1) return false;
    }
  return true;
}

/// c_{α,−β} = c_{β,−α}
inline bool swap_symmetry_holds(const SerreBasis& s) {
  std::vector<std::string> names(SerreBasis::kPositive.begin(), SerreBasis::kPositive.end());
  names.insert(names.end(), SerreBasis::kNegative.begin(), SerreBasis::kNegative.end());
  for (const auto& a : names)
    for (const auto& b : names) {
      if (a == b) continue;
      auto c1 = structure_constant(s, a, opposite_name(b));
      auto c2 = structure_constant(s, b, opposite_name(a));
      if (c1 != c2) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Eigentables of ad(h) and ad(H).

struct EigenRow {
  Rational eigenvalue;
  std::vector<std::string> vectors;
};

inline std::vector<EigenRow> expected_eigentable_h() {
  return {{3, {"X2", "Y1"}},        {2, {"x3"}},       {1, {"x1", "y2"}}, {0, {"X3", "Y3", "h", "H"}},
          {-1, {"x2", "y1"}},       {-2, {"y3"}},      {-3, {"X1", "Y2"}}};
}

inline std::vector<EigenRow> expected_eigentable_H() {
  return {{2, {"X1"}},
          {1, {"X3", "x2", "y3", "Y2"}},
          {0, {"x1", "y1", "h", "H"}},
          {-1, {"X2", "x3", "y2", "Y3"}},
          {-2, {"Y1"}}};
}

/// Eigenvalue of ad(a) on each named basis vector (all of them are eigenvectors).
inline std::vector<EigenRow> eigentable(const SerreBasis& s, const G2Element& a) {
  std::vector<EigenRow> rows;
  for (const auto& [name, v] : s.named()) {
    G2Element image = bracket(a, v);
    Rational lambda;
    if (!image.is_zero()) {
      auto k = proportionality(image.to_vector(), v.to_vector());
      if (!k) throw SpectrumMismatch(name + " is not an eigenvector");
      lambda = *k;
    }
    auto it = std::find_if(rows.begin(), rows.end(), [&](const EigenRow& r) { return r.eigenvalue == lambda; });
    if (it == rows.end())
      rows.push_back({lambda, {name}});
    else
      it->vectors.push_back(name);
  }
  std::sort(rows.begin(), rows.end(), [](const EigenRow& p, const EigenRow& q) { return p.eigenvalue > q.eigenvalue; });
  return rows;
}

/// Same eigenvalues with the same sets of eigenvectors (order within a row ignored).
inline bool eigentables_match(std::vector<EigenRow> got, std::vector<EigenRow> want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i].eigenvalue != want[i].eigenvalue) return false;
    std::sort(got[i].vectors.begin(), got[i].vectors.end());
    std::sort(want[i].vectors.begin(), want[i].vectors.end());
    if (got[i].vectors != want[i].vectors) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text renderings.

inline std::string pad_left(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

inline std::string format_constants_text(const StructureConstantTable& t) {
  std::string out = "[positive, negative]\n";
  out += pad_left("", 4);
  for (const auto& n : SerreBasis::kNegative) out += pad_left(n, 5);
  out += "\n";
  for (int i = 0; i < 6; ++i) {
    out += pad_left(SerreBasis::kPositive[i], 4);
    for (int j = 0; j < 6; ++j) out += pad_left(t.c[i][j].str(), 5);
    out += "\n";
  }
  out += "\n[x_i, y_i] = h_i, [X_i, Y_i] = H_i\n";
  static const std::array<std::string, 6> dn = {"h1", "h2", "h3", "H1", "H2", "H3"};
  for (int i = 0; i < 6; ++i) out += dn[i] + " = " + t.diagonal[i].str() + "\n";
  out += "\n[positive, positive]\n";
  out += "[x1, x2] = " + (t.x1x2 == 1 ? std::string() : t.x1x2.str() + " ") + "X3\n";
  return out;
}

inline std::string format_constants_latex(const StructureConstantTable& t) {
  std::string out = "\\begin{array}{|c||c|c|c|c|c|c|}\n\\hline\nc_{\\alpha,\\beta}";
  for (const auto& n : SerreBasis::kNegative) out += "&" + std::string(1, n[0]) + "_" + n.substr(1);
  out += "\\\\\n\\hline\\hline\n";
  for (int i = 0; i < 6; ++i) {
    const auto& n = SerreBasis::kPositive[i];
    out += std::string(1, n[0]) + "_" + n.substr(1);
    for (int j = 0; j < 6; ++j) out += "&" + t.c[i][j].str();
    out += "\\\\\n\\hline\n";
  }
  out += "\\end{array}\n";
  static const std::array<std::string, 6> dn = {"h_1", "h_2", "h_3", "H_1", "H_2", "H_3"};
  for (int i = 0; i < 6; ++i) out += dn[i] + "=" + t.diagonal[i].str() + "\n";
  out += "[x_1,x_2]=X_3\n";
  return out;
}

}  // namespace g2roll
