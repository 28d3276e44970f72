#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2roll/error.hpp"
#include "g2roll/exact/matrix.hpp"
#include "g2roll/g2.hpp"
#include "g2roll/octonion.hpp"
#include "g2roll/quaternion.hpp"
#include "g2roll/roots.hpp"
#include "g2roll/serre.hpp"

namespace g2roll {

inline int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

struct CompactBasis {
  std::array<G2Element, 3> L, S, ep, epp;  // e′ and e″
};

/// L₁ = X₁ − Y₁, L₂ = (X₂ − Y₂)/6, L₃ = (X₃ − Y₃)/6, S₁ = (x₁ − y₁)/4, S₂ = (x₂ − y₂)/2, S₃ = (x₃ − y₃)/2,
/// e′ = (3L + 2S)/4, e″ = (L − 2S)/4.
inline CompactBasis compact_basis(const SerreBasis& s) {
  CompactBasis cb;
  const Rational lden[3] = {1, 6, 6};
  const Rational sden[3] = {4, 2, 2};
  for (int i = 0; i < 3; ++i) {
    cb.L[i] = (Rational(1) / lden[i]) * (s.Xs[i] - s.Ys[i]);
    cb.S[i] = (Rational(1) / sden[i]) * (s.xs[i] - s.ys[i]);
    cb.ep[i] = Rational(1, 4) * (Rational(3) * cb.L[i] + Rational(2) * cb.S[i]);
    cb.epp[i] = Rational(1, 4) * (cb.L[i] - Rational(2) * cb.S[i]);
  }
  return cb;
}

struct RelationCheck {
  std::string name;
  bool holds;
};

/// [L_i,L_j] = ε L_k, [L_i,S_j] = ε S_k, [S_i,S_j] = ε(¾L_k − S_k), for all i, j.
inline std::vector<RelationCheck> verify_compact_relations(const CompactBasis& cb) {
  std::vector<RelationCheck> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      G2Element ll, ls, ss;
      for (int k = 0; k < 3; ++k) {
        Rational e = levi_civita(i, j, k);
        ll = ll + e * cb.L[k];
        ls = ls + e * cb.S[k];
        ss = ss + e * (Rational(3, 4) * cb.L[k] - cb.S[k]);
      }
      out.push_back({"[L" + std::to_string(i + 1) + ",L" + std::to_string(j + 1) + "]", bracket(cb.L[i], cb.L[j]) == ll});
      out.push_back({"[L" + std::to_string(i + 1) + ",S" + std::to_string(j + 1) + "]", bracket(cb.L[i], cb.S[j]) == ls});
      out.push_back({"[S" + std::to_string(i + 1) + ",S" + std::to_string(j + 1) + "]", bracket(cb.S[i], cb.S[j]) == ss});
    }
  return out;
}

/// e′ and e″ each close as so₃ and commute with each other; L = e′ + e″ and S = (e′ − 3e″)/2.
inline std::vector<RelationCheck> verify_ideal_split(const CompactBasis& cb) {
  std::vector<RelationCheck> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      G2Element p, q;
      for (int k = 0; k < 3; ++k) {
        p = p + Rational(levi_civita(i, j, k)) * cb.ep[k];
        q = q + Rational(levi_civita(i, j, k)) * cb.epp[k];
      }
      std::string a = std::to_string(i + 1), b = std::to_string(j + 1);
      out.push_back({"[e'" + a + ",e'" + b + "]", bracket(cb.ep[i], cb.ep[j]) == p});
      out.push_back({"[e''" + a + ",e''" + b + "]", bracket(cb.epp[i], cb.epp[j]) == q});
      out.push_back({"[e'" + a + ",e''" + b + "]", bracket(cb.ep[i], cb.epp[j]).is_zero()});
    }
  for (int i = 0; i < 3; ++i) {
    std::string a = std::to_string(i + 1);
    out.push_back({"L" + a + "=e'" + a + "+e''" + a, cb.L[i] == cb.ep[i] + cb.epp[i]});
    out.push_back({"S" + a + "=(e'" + a + "-3e''" + a + ")/2",
                   cb.S[i] == Rational(1, 2) * (cb.ep[i] - Rational(3) * cb.epp[i])});
  }
  return out;
}

/// The quadratic forced by S_i = a e′_i + b e″_i: writing [S₁,S₂] = p L₃ + q S₃, both a and b solve x² − qx − p = 0.
struct QuadraticDerivation {
  Rational p, q;                // [S₁,S₂] = p L₃ + q S₃
  Vector coefficients;          // c₀, c₁, c₂ of x² − qx − p
  std::vector<Rational> roots;  // rational roots, ascending
};

inline QuadraticDerivation derive_quadratic(const CompactBasis& cb) {
  auto pq = coordinates_in({cb.L[2].to_vector(), cb.S[2].to_vector()}, bracket(cb.S[0], cb.S[1]).to_vector());
  if (!pq) throw RelationFailure("[S1,S2] is not in span{L3,S3}");
  QuadraticDerivation d;
  d.p = (*pq)[0];
  d.q = (*pq)[1];
  d.coefficients = {-d.p, -d.q, Rational(1)};
  d.roots = rational_roots(d.coefficients);
  std::sort(d.roots.begin(), d.roots.end());
  return d;
}

struct WeylBasisRecord {
  bool involution_is_automorphism = false;  // θ: E_α ↦ −E_{−α}, h ↦ −h, H ↦ −H
  bool fixed_set_is_compact = false;        // 𝔨 = {u : θu = u}
};

inline WeylBasisRecord weyl_basis_record(const SerreBasis& s, const CompactBasis& cb) {
  const auto named = s.named();
  std::vector<Vector> basis;
  std::vector<G2Element> images;
  for (const auto& [name, v] : named) {
    basis.push_back(v.to_vector());
    images.push_back(name == "h" || name == "H" ? Rational(-1) * v : Rational(-1) * s.get(opposite_name(name)));
  }
  auto theta = [&](const G2Element& u) {
    auto c = coordinates_in(basis, u.to_vector());
    if (!c) throw DecompositionFailure("element outside the span of the Serre basis");
    G2Element r;
    for (std::size_t k = 0; k < images.size(); ++k)
      if (!(*c)[k].is_zero()) r = r + (*c)[k] * images[k];
    return r;
  };
  WeylBasisRecord rec;
  rec.involution_is_automorphism = true;
  for (const auto& [na, a] : named)
    for (const auto& [nb, b] : named)
      if (theta(bracket(a, b)) != bracket(theta(a), theta(b))) rec.involution_is_automorphism = false;
  std::vector<Vector> fixed, k;
  for (const auto& u : g2_basis()) fixed.push_back((theta(u) - u).to_vector());
  // fixed set = kernel of θ − I, found through coordinates in the g₂ basis
  Matrix m = Matrix::from_columns(fixed, G2Element::kCoords);
  std::vector<Vector> fixed_elements;
  const auto gb = g2_basis();
  for (const auto& kv : kernel_basis(m)) {
    G2Element u;
    for (std::size_t i = 0; i < gb.size(); ++i)
      if (!kv[i].is_zero()) u = u + kv[i] * gb[i];
    fixed_elements.push_back(u.to_vector());
  }
  for (int i = 0; i < 3; ++i) {
    k.push_back(cb.L[i].to_vector());
    k.push_back(cb.S[i].to_vector());
  }
  rec.fixed_set_is_compact = spans_equal(fixed_elements, k);
  return rec;
}

// ---------------------------------------------------------------------------
// 𝔨 → so₃ ⊕ so₃ ≅ ℝ³ × ℝ³

/// e′_i ↦ (e_i, 0), e″_i ↦ (0, e_i); with `swapped` the two summands trade places.
inline Vector compact_to_so3so3(const CompactBasis& cb, const G2Element& u, bool swapped = false) {
  std::vector<Vector> basis;
  for (int i = 0; i < 3; ++i) basis.push_back(cb.ep[i].to_vector());
  for (int i = 0; i < 3; ++i) basis.push_back(cb.epp[i].to_vector());
  auto c = coordinates_in(basis, u.to_vector());
  if (!c) throw PlaneMismatch("element outside the maximal compact subalgebra");
  if (!swapped) return *c;
  return {(*c)[3], (*c)[4], (*c)[5], (*c)[0], (*c)[1], (*c)[2]};
}

/// Rows: images of L₁, L₂, L₃, S₁, S₂, S₃ in (ω′, ω″) coordinates.
inline Matrix compact_change_of_basis(const CompactBasis& cb, bool swapped = false) {
  std::vector<Vector> rows;
  for (int i = 0; i < 3; ++i) rows.push_back(compact_to_so3so3(cb, cb.L[i], swapped));
  for (int i = 0; i < 3; ++i) rows.push_back(compact_to_so3so3(cb, cb.S[i], swapped));
  return Matrix::from_rows(rows);
}

/// Bracket on so₃ ⊕ so₃ in (ω′, ω″) coordinates.
inline Vector so3so3_bracket(const Vector& a, const Vector& b) {
  Vec3 p = cross(Vec3::from(a, 0), Vec3::from(b, 0));
  Vec3 q = cross(Vec3::from(a, 3), Vec3::from(b, 3));
  return {p[0], p[1], p[2], q[0], q[1], q[2]};
}

inline DistributionData so3so3_data(std::vector<Vector> isotropy, std::vector<Vector> plane, std::string name) {
  DistributionData d;
  d.name = std::move(name);
  d.algebra_dim = 6;
  d.isotropy = std::move(isotropy);
  d.plane = std::move(plane);
  d.bracket = so3so3_bracket;
  return d;
}

/// 𝔥 = ℝL₃ and W = span{S₁, S₂}, carried into so₃ ⊕ so₃.
inline DistributionData compact_distribution_data(const CompactBasis& cb, bool swapped = false) {
  return so3so3_data({compact_to_so3so3(cb, cb.L[2], swapped)},
                     {compact_to_so3so3(cb, cb.S[0], swapped), compact_to_so3so3(cb, cb.S[1], swapped)},
                     swapped ? "k (swapped)" : "k");
}

/// ⟨ω′,e₃⟩ = ⟨ω″,e₃⟩ = 0 and ρω′ + ω″ = 0.
inline bool satisfies_plane_equations(const Vector& w, const Rational& ratio) {
  if (!w[2].is_zero() || !w[5].is_zero()) return false;
  for (int i = 0; i < 3; ++i)
    if (!(ratio * w[i] + w[3 + i]).is_zero()) return false;
  return true;
}

/// The ratio ρ with ρω′ + ω″ = 0, read off a nonzero plane vector, if consistent.
inline std::optional<Rational> ratio_of(const Vector& w) {
  std::optional<Rational> r;
  for (int i = 0; i < 3; ++i) {
    if (w[i].is_zero()) {
      if (!w[3 + i].is_zero()) return std::nullopt;
      continue;
    }
    Rational k = -w[3 + i] / w[i];
    if (r && *r != k) return std::nullopt;
    r = k;
  }
  return r;
}

// ---------------------------------------------------------------------------
// K̃ = SU₂ × SU₂ acting on V.

inline void require_unit(const Quaternion& q) {
  if (q.norm2() != 1) throw NotUnit("|q|^2 = " + q.norm2().str());
}

/// (q₁, q₂)·(a, b) = (q₁ a q̄₁, q₂ b q̄₁); an automorphism of the product.
inline SplitOctonion ktilde_action(const Quaternion& q1, const Quaternion& q2, const SplitOctonion& v) {
  require_unit(q1);
  require_unit(q2);
  return {q1 * v.a * q1.conj(), q2 * v.b * q1.conj()};
}

/// The printed formula (q₁ a q̄₁, q₁ b q̄₂), kept for comparison.
inline SplitOctonion ktilde_action_as_printed(const Quaternion& q1, const Quaternion& q2, const SplitOctonion& v) {
  require_unit(q1);
  require_unit(q2);
  return {q1 * v.a * q1.conj(), q1 * v.b * q2.conj()};
}

/// 7×7 matrix of the action on chart A.
inline Matrix ktilde_matrix(const Quaternion& q1, const Quaternion& q2) {
  std::vector<Vector> cols;
  for (int n = 0; n < 7; ++n) cols.push_back(to_chart_a(ktilde_action(q1, q2, basis_element(n))).first);
  return Matrix::from_columns(cols, 7);
}

/// Which of (±1, ±1) act trivially on V.
inline std::vector<std::pair<int, int>> ktilde_kernel_among_signs() {
  std::vector<std::pair<int, int>> out;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      if (ktilde_matrix(Quaternion::real(s1), Quaternion::real(s2)) == Matrix::identity(7)) out.push_back({s1, s2});
  return out;
}

/// Rank of the derived action of su₂ ⊕ su₂ on V; 6 means the kernel of the representation is discrete.
inline std::size_t ktilde_infinitesimal_rank() {
  std::vector<Vector> gens;
  for (int slot = 0; slot < 2; ++slot)
    for (int i = 1; i <= 3; ++i) {
      Quaternion u = Quaternion::unit(i);
      Matrix m(7, 7);
      for (int n = 0; n < 7; ++n) {
        SplitOctonion e = basis_element(n);
        // derivative of the action at the identity along u in the given slot
        SplitOctonion d = slot == 0 ? SplitOctonion{u * e.a - e.a * u, Rational(-1) * (e.b * u)} : SplitOctonion{{}, u * e.b};
        Vector c = to_chart_a(d).first;
        for (int r = 0; r < 7; ++r) m(r, n) = c[r];
      }
      gens.push_back(m.flat());
    }
  return span_rank(gens);
}

}  // namespace g2roll
