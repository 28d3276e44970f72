#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "g2roll/compact.hpp"
#include "g2roll/error.hpp"
#include "g2roll/exact/matrix.hpp"
#include "g2roll/exact/poly.hpp"
#include "g2roll/exact/sample.hpp"
#include "g2roll/g2.hpp"
#include "g2roll/octonion.hpp"
#include "g2roll/rolling.hpp"
#include "g2roll/roots.hpp"

namespace g2roll {

// Subspaces of V in this header are spanned by chart A vectors.

inline Vector chart_a(const SplitOctonion& x) { return to_chart_a(x).first; }

inline void require_null(const SplitOctonion& x) {
  if (!x.is_imaginary()) throw NotNull("not an imaginary octonion");
  if (x.is_zero()) throw NotNull("zero vector");
  if (!inner_product(x, x).is_zero()) throw NotNull("<x,x> = " + inner_product(x, x).str());
}

/// 8×7 matrix of y ↦ xy from chart A into ℍ².
inline Matrix left_multiplication(const SplitOctonion& x) {
  std::vector<Vector> cols;
  for (int n = 0; n < 7; ++n) cols.push_back((x * basis_element(n)).to_vector());
  return Matrix::from_columns(cols, 8);
}

/// x⁰ = {y ∈ V : xy = 0}
inline std::vector<Vector> annihilator(const SplitOctonion& x) { return kernel_basis(left_multiplication(x)); }

struct AnnihilatorChain {
  std::vector<Vector> line, x0, x0_perp, x_perp;
  std::array<std::size_t, 5> dims() const { return {line.size(), x0.size(), x0_perp.size(), x_perp.size(), 7}; }
  bool nested() const { return span_contains(x0, line) && span_contains(x0_perp, x0) && span_contains(x_perp, x0_perp); }
};

/// ℝx ⊂ x⁰ ⊂ (x⁰)⊥ ⊂ x⊥ ⊂ V
inline AnnihilatorChain annihilator_chain(const SplitOctonion& x) {
  require_null(x);
  const Matrix gram = inner_product_gram_chart_a();
  AnnihilatorChain c;
  c.line = {chart_a(x)};
  c.x0 = annihilator(x);
  c.x0_perp = orthogonal_complement(c.x0, gram);
  c.x_perp = orthogonal_complement(c.line, gram);
  return c;
}

/// D_[x] = x⁰/ℝx inside T_[x]C = x⊥/ℝx; both carried by representatives.
struct QuadricPlane {
  Vector point;
  std::vector<Vector> x0;       // contains the point
  std::vector<Vector> tangent;  // x⊥
  std::size_t rank() const { return span_rank(x0) - 1; }
};

inline QuadricPlane quadric_distribution(const SplitOctonion& x) {
  auto c = annihilator_chain(x);
  return {c.line[0], c.x0, c.x_perp};
}

/// Conjugation between chart B (where g₂ acts) and chart A.
inline Matrix chart_b_to_a_matrix() {
  Matrix p = Matrix::identity(7);
  for (int i = 0; i < 3; ++i) p(i, i) = -1;
  return p;
}

inline Matrix to_chart_a_operator(const Matrix& chart_b_op) {
  Matrix p = chart_b_to_a_matrix();
  return p * chart_b_op * p;
}

inline SplitOctonion apply_chart_b(const Matrix& g, const SplitOctonion& x) {
  return from_chart_a(to_chart_a_operator(g) * chart_a(x));
}

/// g·D_[x] = D_[g·x] for a chart B group element g.
inline bool distribution_is_carried(const Matrix& g, const SplitOctonion& x) {
  Matrix ga = to_chart_a_operator(g);
  std::vector<Vector> image;
  for (const auto& v : annihilator(x)) image.push_back(ga * v);
  return spans_equal(image, annihilator(from_chart_a(ga * chart_a(x))));
}

/// {ξ ∈ g₂ : ξ·x ∈ ℝx}
inline std::vector<G2Element> isotropy_algebra(const SplitOctonion& x) {
  require_null(x);
  const auto basis = g2_basis();
  const Vector xb = chart_a_to_b(chart_a(x));
  // unknowns: 14 coefficients and λ, with Σ c_k ρ(e_k)x − λx = 0
  std::vector<Vector> cols;
  for (const auto& e : basis) cols.push_back(rho(e) * xb);
  cols.push_back(-xb);
  std::vector<G2Element> out;
  for (const auto& k : kernel_basis(Matrix::from_columns(cols, 7))) {
    G2Element u;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!k[i].is_zero()) u = u + k[i] * basis[i];
    out.push_back(u);
  }
  return out;
}

/// dim span{ξ·x : ξ ∈ g₂}
inline std::size_t infinitesimal_transitivity(const SplitOctonion& x) {
  const Vector xb = chart_a_to_b(chart_a(x));
  std::vector<Vector> images;
  for (const auto& e : g2_basis()) images.push_back(rho(e) * xb);
  return span_rank(images);
}

inline SplitOctonion quadric_base_point() { return basis_e(0); }

/// A rational null vector (v, s·h) with v ∈ S² ⊂ Im ℍ, h ∈ S³, rescaled by a positive rational.
inline SplitOctonion sample_null(Rng& rng) {
  Vec3 v = sample_s2(rng.rational(3, 3), rng.rational(3, 3));
  Quaternion h = sample_unit_quaternion(rng);
  Rational scale = abs(rng.nonzero_rational(4, 3));
  return scale * SplitOctonion{Quaternion::imaginary(v), h};
}

inline SplitOctonion sample_normalized_null(Rng& rng) {
  Vec3 v = sample_s2(rng.rational(3, 3), rng.rational(3, 3));
  return {Quaternion::imaginary(v), sample_unit_quaternion(rng)};
}

struct QuadricPlaneWitness {
  std::vector<Rational> multiples;  // ξ·e₁ = k f₂, ξ′·e₁ = k′ f₃
  bool isotropy_fixes_line = false;
  bool spans_x0 = false;
};

/// W acts on the base ray onto x⁰ mod ℝe₁, and 𝔭 preserves ℝe₁.
inline QuadricPlaneWitness quadric_plane_witness(const RootDatum& rd) {
  QuadricPlaneWitness w;
  const SplitOctonion e1 = quadric_base_point();
  const Vector e1b = chart_a_to_b(chart_a(e1));
  const auto plane = plane_vectors(rd);
  const SplitOctonion targets[2] = {basis_f(1), basis_f(2)};
  std::vector<Vector> span{chart_a(e1)};
  for (int k = 0; k < 2; ++k) {
    Vector image = chart_b_to_a(rho(plane[k]) * e1b);
    auto m = proportionality(image, chart_a(targets[k]));
    if (!m || m->is_zero()) throw PlaneMismatch("W generator does not map e1 onto the expected weight line");
    w.multiples.push_back(*m);
    span.push_back(image);
  }
  w.spans_x0 = spans_equal(span, annihilator(e1));
  w.isotropy_fixes_line = true;
  for (const auto& u : build_parabolic(rd))
    if (!in_span({chart_a(e1)}, chart_b_to_a(rho(u) * e1b))) w.isotropy_fixes_line = false;
  if (!w.spans_x0) throw PlaneMismatch("W·e1 does not span x0 modulo e1");
  return w;
}

/// (g₂, isotropy of [e₁], W)
inline DistributionData distribution_data_of_quadric(const RootDatum& rd) {
  quadric_plane_witness(rd);
  return g2_distribution_data(isotropy_algebra(quadric_base_point()), plane_vectors(rd), "quadric");
}

// ---------------------------------------------------------------------------
// Covering map C → Q.

struct NormalizedNull {
  Quaternion v;  // imaginary, |v| = 1
  Quaternion h;  // |h| = 1

  static NormalizedNull from(const SplitOctonion& x) {
    if (!x.is_imaginary() || x.a.norm2() != 1 || x.b.norm2() != 1) throw NotNormalized("need |v| = |h| = 1");
    return {x.a, x.b};
  }
  SplitOctonion octonion() const { return {v, h}; }
};

/// Φ(v, h) = (R_{v h̄}, v)
inline RollingState covering_map(const NormalizedNull& p, const Rational& ratio) {
  return {rotation_of(p.v * p.h.conj()), p.v.im(), ratio};
}

/// Choices for the rotation part q of the cover; Φ uses v h̄, the other two are kept for comparison.
enum class CoverRotation { v_hbar, h, hbar };

inline std::string to_string(CoverRotation r) {
  switch (r) {
    case CoverRotation::v_hbar: return "R_{v hbar}";
    case CoverRotation::h: return "R_h";
    case CoverRotation::hbar: return "R_{hbar}";
  }
  return "";
}

/// (ω, ẋ) for the image of a tangent vector (a, b) ∈ x⁰, after removing its radial part.
inline std::array<Vec3, 2> covering_differential(const NormalizedNull& p, const SplitOctonion& y,
                                                 CoverRotation rot = CoverRotation::v_hbar) {
  Rational radial = dot(p.v.im(), y.a.im());
  Quaternion a = y.a - radial * p.v;
  Quaternion b = y.b - radial * p.h;
  Quaternion q, qdot;
  switch (rot) {
    case CoverRotation::v_hbar:
      q = p.v * p.h.conj();
      qdot = a * p.h.conj() + p.v * b.conj();
      break;
    case CoverRotation::h:
      q = p.h;
      qdot = b;
      break;
    case CoverRotation::hbar:
      q = p.h.conj();
      qdot = b.conj();
      break;
  }
  Vec3 omega = Rational(2) * (qdot * q.conj()).im();
  return {omega, a.im()};
}

inline Vector omega_xdot(const std::array<Vec3, 2>& t) {
  return {t[0][0], t[0][1], t[0][2], t[1][0], t[1][1], t[1][2]};
}

/// dΦ(D_[x]) as (ω, ẋ) vectors.
inline std::vector<Vector> covering_image_of_distribution(const NormalizedNull& p,
                                                          CoverRotation rot = CoverRotation::v_hbar) {
  std::vector<Vector> out;
  for (const auto& y : annihilator(p.octonion()))
    out.push_back(omega_xdot(covering_differential(p, from_chart_a(y), rot)));
  return span_basis(out);
}

/// The rolling plane at x in (ω, ẋ) coordinates: x·ẋ = 0, ω·x = 0, (ρ+1)ẋ = ω × x.
inline std::vector<Vector> rolling_plane_at(const Vec3& x, const Rational& ratio) {
  std::vector<Vector> rows;
  rows.push_back({0, 0, 0, x[0], x[1], x[2]});
  rows.push_back({x[0], x[1], x[2], 0, 0, 0});
  Mat3 cx = hat(x);  // ω × x = −x̂ ω
  for (int i = 0; i < 3; ++i) {
    Vector r = zero_vector(6);
    for (int j = 0; j < 3; ++j) r[j] = cx(i, j);
    r[3 + i] = ratio + 1;
    rows.push_back(r);
  }
  return kernel_basis(Matrix::from_rows(rows));
}

inline bool covering_matches_ratio(const NormalizedNull& p, const Rational& ratio) {
  auto image = covering_image_of_distribution(p);
  return image.size() == 2 && spans_equal(image, rolling_plane_at(p.v.im(), ratio));
}

/// ρ read off the image of D, if a single ratio fits every image vector.
inline std::optional<Rational> realized_ratio(const NormalizedNull& p, CoverRotation rot = CoverRotation::v_hbar) {
  std::optional<Rational> r;
  const Vec3 x = p.v.im();
  for (const auto& w : covering_image_of_distribution(p, rot)) {
    Vec3 omega = Vec3::from(w, 0), xdot = Vec3::from(w, 3);
    auto k = proportionality(cross(omega, x).to_vector(), xdot.to_vector());
    if (!k) return std::nullopt;
    Rational candidate = *k - 1;
    if (r && *r != candidate) return std::nullopt;
    r = candidate;
  }
  return r;
}

/// ġg⁻¹ = hat(2 Im(q̇q̄)) for g = R_q, checked against the derivative of the quadratic entries of R_q.
inline bool rotation_derivative_identity(const Quaternion& q, const Quaternion& qdot) {
  using PQ = std::array<MultiPoly, 4>;
  auto var = [](int i) { return MultiPoly::variable(4, static_cast<std::size_t>(i)); };
  auto mul = [](const PQ& a, const PQ& b) -> PQ {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  };
  const MultiPoly zero(4), one = MultiPoly::constant(4, 1);
  PQ qq = {var(0), var(1), var(2), var(3)};
  PQ qc = {var(0), -var(1), -var(2), -var(3)};
  Vector at = q.to_vector(), dir = qdot.to_vector();
  Mat3 gdot;
  for (int col = 0; col < 3; ++col) {
    PQ e = {zero, zero, zero, zero};
    e[col + 1] = one;
    PQ image = mul(mul(qq, e), qc);
    for (int row = 0; row < 3; ++row) {
      Rational d;
      for (int k = 0; k < 4; ++k) d += image[row + 1].derivative(k).evaluate(at) * dir[k];
      gdot(row, col) = d;
    }
  }
  Mat3 lhs = gdot * rotation_of(q).transpose();
  return lhs == hat(Rational(2) * (qdot * q.conj()).im());
}

/// Floating spot check at an arbitrary (unnormalized) point: largest residual of the rolling
/// equations over the image of D. Inexact by construction; meant for tolerance checks only.
inline double covering_residual_floating(const std::array<double, 3>& v_in, const std::array<double, 4>& h_in,
                                         double ratio) {
  double nv = std::sqrt(v_in[0] * v_in[0] + v_in[1] * v_in[1] + v_in[2] * v_in[2]);
  double nh = std::sqrt(h_in[0] * h_in[0] + h_in[1] * h_in[1] + h_in[2] * h_in[2] + h_in[3] * h_in[3]);
  using Q = std::array<double, 4>;
  auto mul = [](const Q& a, const Q& b) -> Q {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  };
  auto conj = [](const Q& a) -> Q { return {a[0], -a[1], -a[2], -a[3]}; };
  Q v = {0, v_in[0] / nv, v_in[1] / nv, v_in[2] / nv};
  Q h = {h_in[0] / nh, h_in[1] / nh, h_in[2] / nh, h_in[3] / nh};
  double best = 0;
  // left multiplication by x on chart A, then its null space by Gauss-Jordan
  std::array<std::array<double, 7>, 8> m{};
  for (int n = 0; n < 7; ++n) {
    Q a{}, b{};
    if (n < 3) {
      a[n + 1] = 0.5;
      b[n + 1] = 0.5;
    } else if (n < 6) {
      a[n - 2] = 0.5;
      b[n - 2] = -0.5;
    } else {
      b[0] = 1;
    }
    Q r1 = mul(v, a), r2 = mul(conj(b), h), s1 = mul(b, v), s2 = mul(h, conj(a));
    for (int k = 0; k < 4; ++k) {
      m[k][n] = r1[k] + r2[k];
      m[4 + k][n] = s1[k] + s2[k];
    }
  }
  std::array<std::array<double, 7>, 8> r = m;
  std::array<int, 7> pivot_col{};
  int rank = 0;
  std::array<bool, 7> is_pivot{};
  for (int c = 0; c < 7 && rank < 8; ++c) {
    int p = rank;
    for (int i = rank + 1; i < 8; ++i)
      if (std::fabs(r[i][c]) > std::fabs(r[p][c])) p = i;
    if (std::fabs(r[p][c]) < 1e-12) continue;
    std::swap(r[p], r[rank]);
    double inv = 1.0 / r[rank][c];
    for (int j = 0; j < 7; ++j) r[rank][j] *= inv;
    for (int i = 0; i < 8; ++i)
      if (i != rank && r[i][c] != 0) {
        double f = r[i][c];
        for (int j = 0; j < 7; ++j) r[i][j] -= f * r[rank][j];
      }
    pivot_col[rank] = c;
    is_pivot[c] = true;
    ++rank;
  }
  Q q = mul(v, conj(h));
  for (int free = 0; free < 7; ++free) {
    if (is_pivot[free]) continue;
    std::array<double, 7> y{};
    y[free] = 1;
    for (int k = 0; k < rank; ++k) y[pivot_col[k]] = -r[k][free];
    Q a{}, b{};
    for (int i = 0; i < 3; ++i) {
      a[i + 1] += 0.5 * (y[i] + y[3 + i]);
      b[i + 1] += 0.5 * (y[i] - y[3 + i]);
    }
    b[0] = y[6];
    double radial = v[1] * a[1] + v[2] * a[2] + v[3] * a[3];
    for (int k = 0; k < 4; ++k) {
      a[k] -= radial * v[k];
      b[k] -= radial * h[k];
    }
    Q qd = mul(a, conj(h));
    Q t = mul(v, conj(b));
    for (int k = 0; k < 4; ++k) qd[k] += t[k];
    Q w = mul(qd, conj(q));
    double om[3] = {2 * w[1], 2 * w[2], 2 * w[3]};
    double x[3] = {v[1], v[2], v[3]};
    double cx[3] = {om[1] * x[2] - om[2] * x[1], om[2] * x[0] - om[0] * x[2], om[0] * x[1] - om[1] * x[0]};
    for (int i = 0; i < 3; ++i) best = std::max(best, std::fabs((ratio + 1) * a[i + 1] - cx[i]));
    best = std::max(best, std::fabs(om[0] * x[0] + om[1] * x[1] + om[2] * x[2]));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Involutions.

/// σ = image of (−1, 1): (a, b) ↦ (a, −b)
inline Matrix sigma_involution() { return ktilde_matrix(Quaternion::real(-1), Quaternion::real(1)); }

/// σ(x⁰) = (σx)⁰
inline bool involution_preserves_distribution(const Matrix& chart_a_op, const SplitOctonion& x) {
  std::vector<Vector> image;
  for (const auto& v : annihilator(x)) image.push_back(chart_a_op * v);
  return spans_equal(image, annihilator(from_chart_a(chart_a_op * chart_a(x))));
}

}  // namespace g2roll
