#pragma once

#include <string>
#include <vector>

#include "g2roll/compact.hpp"
#include "g2roll/error.hpp"
#include "g2roll/exact/matrix.hpp"
#include "g2roll/exact/poly.hpp"
#include "g2roll/roots.hpp"

namespace g2roll {

/// A point (g, x) ∈ SO₃ × S² of the configuration space, with the radius ratio ρ = R/r.
struct RollingState {
  Mat3 g;
  Vec3 x;
  Rational ratio;

  void validate() const {
    if (g.transpose() * g != Mat3::identity() || g.det() != 1) throw NotNormalized("g is not in SO(3)");
    if (x.norm2() != 1) throw NotNormalized("x is not a unit vector");
    if (ratio.sign() <= 0) throw BadParameters("ratio must be positive");
  }

  /// 12 ambient coordinates: g row-major, then x.
  Vector to_vector() const {
    Vector v = g.to_vector();
    for (int i = 0; i < 3; ++i) v.push_back(x[i]);
    return v;
  }
};

inline RollingState base_state(const Rational& ratio) { return {Mat3::identity(), Vec3::unit(2), ratio}; }

/// A tangent vector (ġ, ẋ) at some state.
struct RollingTangent {
  Mat3 gdot;
  Vec3 xdot;

  Vector to_vector() const {
    Vector v = gdot.to_vector();
    for (int i = 0; i < 3; ++i) v.push_back(xdot[i]);
    return v;
  }
};

/// Infinitesimal action of (ω′, ω″) ∈ so₃ ⊕ so₃ at s: ġ = ω̂′g − gω̂″, ẋ = ω′ × x.
inline RollingTangent infinitesimal_action(const RollingState& s, const Vec3& w1, const Vec3& w2) {
  return {hat(w1) * s.g - s.g * hat(w2), cross(w1, s.x)};
}

/// ω with ġg⁻¹ = ω̂; nullopt if ġgᵗ is not antisymmetric.
inline std::optional<Vec3> angular_velocity(const RollingState& s, const RollingTangent& t) {
  Mat3 m = t.gdot * s.g.transpose();
  if (!is_antisymmetric(m)) return std::nullopt;
  return vee(m);
}

/// No-slip (ρ+1)ẋ = ω × x and no-spin ⟨ω, x⟩ = 0, for a tangent vector of Q.
inline bool is_rolling_tangent(const RollingState& s, const RollingTangent& t) {
  auto w = angular_velocity(s, t);
  if (!w) return false;
  if (!dot(s.x, t.xdot).is_zero()) return false;
  if (!dot(*w, s.x).is_zero()) return false;
  return (s.ratio + 1) * t.xdot == cross(*w, s.x);
}

/// Same conditions for an explicit (ω, ẋ) at x.
inline bool is_rolling_velocity(const Rational& ratio, const Vec3& x, const Vec3& omega, const Vec3& xdot) {
  return dot(x, xdot).is_zero() && dot(omega, x).is_zero() && (ratio + 1) * xdot == cross(omega, x);
}

/// Solutions (ω′, ω″) of ⟨ω′,e₃⟩ = ⟨ω″,e₃⟩ = 0, ρω′ + ω″ = 0.
inline std::vector<Vector> base_plane(const Rational& ratio) {
  if (ratio.sign() <= 0) throw BadParameters("ratio must be positive");
  std::vector<Vector> rows;
  Vector r1 = zero_vector(6), r2 = zero_vector(6);
  r1[2] = 1;
  r2[5] = 1;
  rows.push_back(r1);
  rows.push_back(r2);
  for (int i = 0; i < 3; ++i) {
    Vector r = zero_vector(6);
    r[i] = ratio;
    r[3 + i] = 1;
    rows.push_back(r);
  }
  return kernel_basis(Matrix::from_rows(rows));
}

/// (g′, g″)·(g, x) = (g′ g g″⁻¹, g′ x)
inline RollingState group_action(const Mat3& g1, const Mat3& g2, const RollingState& s) {
  return {g1 * s.g * g2.transpose(), g1 * s.x, s.ratio};
}

inline RollingTangent push_tangent(const Mat3& g1, const Mat3& g2, const RollingTangent& t) {
  return {g1 * t.gdot * g2.transpose(), g1 * t.xdot};
}

/// A random rolling tangent at s: a combination of the frame u₁ = e₃×x, u₂ = x×u₁ (or e₁, e₂ at the poles).
inline RollingTangent rolling_tangent_from(const RollingState& s, const Rational& c1, const Rational& c2) {
  Vec3 u1 = cross(Vec3::unit(2), s.x);
  if (u1.is_zero()) u1 = Vec3::unit(0);
  Vec3 u2 = cross(s.x, u1);
  Vec3 w = c1 * u1 + c2 * u2;
  Vec3 xdot = (Rational(1) / (s.ratio + 1)) * cross(w, s.x);
  return {hat(w) * s.g, xdot};
}

// ---------------------------------------------------------------------------
// Polynomial spanning fields on the ambient ℝ⁹ × ℝ³.

inline constexpr std::size_t kAmbient = 12;

namespace detail {
inline MultiPoly ambient_var(std::size_t i) { return MultiPoly::variable(kAmbient, i); }
inline MultiPoly g_var(int r, int c) { return ambient_var(static_cast<std::size_t>(3 * r + c)); }
inline MultiPoly x_var(int i) { return ambient_var(static_cast<std::size_t>(9 + i)); }

using PolyVec3 = std::array<MultiPoly, 3>;

inline PolyVec3 poly_cross(const PolyVec3& a, const PolyVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// (û g, u × x / (ρ+1)) as a 12-component field.
inline PolyField rolling_field(const PolyVec3& u, const Rational& ratio) {
  PolyVec3 x = {x_var(0), x_var(1), x_var(2)};
  PolyField f(kAmbient, MultiPoly(kAmbient));
  // û rows: (0, −u₃, u₂), (u₃, 0, −u₁), (−u₂, u₁, 0)
  const MultiPoly zero(kAmbient);
  std::array<std::array<MultiPoly, 3>, 3> uh = {{{zero, -u[2], u[1]}, {u[2], zero, -u[0]}, {-u[1], u[0], zero}}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k)
        if (!uh[r][k].is_zero()) f[3 * r + c] += uh[r][k] * g_var(k, c);
  PolyVec3 ux = poly_cross(u, x);
  Rational s = Rational(1) / (ratio + 1);
  for (int i = 0; i < 3; ++i) f[9 + i] = s * ux[i];
  return f;
}
}  // namespace detail

/// V_a(g,x) = (û_a g, u_a × x/(ρ+1)) with u₁ = e₃ × x, u₂ = x × u₁.
inline std::array<PolyField, 2> spanning_fields(const Rational& ratio) {
  using detail::x_var;
  const MultiPoly zero(kAmbient);
  detail::PolyVec3 x = {x_var(0), x_var(1), x_var(2)};
  detail::PolyVec3 u1 = {-x[1], x[0], zero};
  detail::PolyVec3 u2 = detail::poly_cross(x, u1);
  return {detail::rolling_field(u1, ratio), detail::rolling_field(u2, ratio)};
}

inline void require_off_poles(const RollingState& s) {
  if (s.x[0].is_zero() && s.x[1].is_zero()) throw DegeneratePoint("frame degenerates at x = ±e3");
}

inline RollingTangent evaluate_field(const PolyField& f, const RollingState& s) {
  Vector v = evaluate(f, s.to_vector());
  return {Mat3::from(v, 0), Vec3::from(v, 9)};
}

/// Ranks of span{V₁,V₂}, + [V₁,V₂], + [V₁,[V₁,V₂]], [V₂,[V₁,V₂]] at the given state.
inline std::vector<std::size_t> growth_vector(const Rational& ratio, const RollingState& pt) {
  require_off_poles(pt);
  auto [v1, v2] = spanning_fields(ratio);
  PolyField v3 = lie_bracket(v1, v2);
  PolyField v4 = lie_bracket(v1, v3);
  PolyField v5 = lie_bracket(v2, v3);
  const Vector p = pt.to_vector();
  std::vector<Vector> span{evaluate(v1, p), evaluate(v2, p)};
  std::vector<std::size_t> dims{span_rank(span)};
  span.push_back(evaluate(v3, p));
  dims.push_back(span_rank(span));
  span.push_back(evaluate(v4, p));
  span.push_back(evaluate(v5, p));
  dims.push_back(span_rank(span));
  return dims;
}

/// (so₃ ⊕ so₃, ℝ(e₃,e₃), base_plane(ρ))
inline DistributionData extract_data(const Rational& ratio) {
  Vector h = {0, 0, 1, 0, 0, 1};
  return so3so3_data({h}, base_plane(ratio), "rolling rho=" + ratio.str());
}

/// Same isotropy and same plane modulo the isotropy.
inline bool same_distribution_data(const DistributionData& a, const DistributionData& b) {
  if (a.algebra_dim != b.algebra_dim) return false;
  if (!spans_equal(a.isotropy, b.isotropy)) return false;
  std::vector<Vector> wa = a.plane, wb = b.plane;
  wa.insert(wa.end(), a.isotropy.begin(), a.isotropy.end());
  wb.insert(wb.end(), b.isotropy.begin(), b.isotropy.end());
  return spans_equal(wa, wb);
}

}  // namespace g2roll
