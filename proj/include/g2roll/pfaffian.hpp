#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2roll/error.hpp"
#include "g2roll/exact/matrix.hpp"
#include "g2roll/exact/poly.hpp"
#include "g2roll/exact/sample.hpp"
#include "g2roll/g2.hpp"
#include "g2roll/octonion.hpp"
#include "g2roll/quadric.hpp"

namespace g2roll {

// Points and displacements are Cartan coordinates p = (x, y, z) ∈ ℝ⁷, indices 0..2, 3..5, 6.

/// A 1-form with linear coefficients: ω_p(dq) = pᵗ C dq.
struct OneForm {
  std::string name;
  Matrix C = Matrix(7, 7);

  Vector row_at(const Vector& p) const { return C.transpose() * p; }
  Rational operator()(const Vector& p, const Vector& dq) const { return dot(p, C * dq); }

  OneForm operator+(const OneForm& o) const { return {name, C + o.C}; }
  OneForm operator-(const OneForm& o) const { return {name, C - o.C}; }
  friend OneForm operator*(const Rational& s, const OneForm& f) { return {f.name, s * f.C}; }
  bool is_zero() const { return C == Matrix(7, 7); }
};

using FormList = std::vector<OneForm>;

inline constexpr int kZ = 6;
inline int xi(int i) { return i; }
inline int yi(int i) { return 3 + i; }

struct PfaffianSystem {
  std::array<OneForm, 3> alpha, beta;
  OneForm gamma1, gamma2, gamma;

  FormList alpha_beta() const { return {alpha[0], alpha[1], alpha[2], beta[0], beta[1], beta[2]}; }
  FormList corrected() const {
    auto f = alpha_beta();
    f.push_back(gamma);
    return f;
  }
};

/// α = z dx − x dz + y × dy, β = z dy − y dz + x × dx, γ₁ = z dz + x·dy, γ₂ = z dz + y·dx, γ = γ₁ − γ₂.
inline PfaffianSystem build_system() {
  PfaffianSystem s;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    OneForm& a = s.alpha[i];
    a.name = "alpha" + std::to_string(i + 1);
    a.C(kZ, xi(i)) += 1;
    a.C(xi(i), kZ) -= 1;
    a.C(yi(j), yi(k)) += 1;
    a.C(yi(k), yi(j)) -= 1;
    OneForm& b = s.beta[i];
    b.name = "beta" + std::to_string(i + 1);
    b.C(kZ, yi(i)) += 1;
    b.C(yi(i), kZ) -= 1;
    b.C(xi(j), xi(k)) += 1;
    b.C(xi(k), xi(j)) -= 1;
  }
  s.gamma1.name = "gamma1";
  s.gamma2.name = "gamma2";
  s.gamma1.C(kZ, kZ) = s.gamma2.C(kZ, kZ) = 1;
  for (int i = 0; i < 3; ++i) {
    s.gamma1.C(xi(i), yi(i)) = 1;
    s.gamma2.C(yi(i), xi(i)) = 1;
  }
  s.gamma = s.gamma1 - s.gamma2;
  s.gamma.name = "gamma";
  return s;
}

/// dJ = 2z dz + x·dy + y·dx
inline OneForm dJ() {
  OneForm f{"dJ", Matrix(7, 7)};
  f.C(kZ, kZ) = 2;
  for (int i = 0; i < 3; ++i) f.C(xi(i), yi(i)) = f.C(yi(i), xi(i)) = 1;
  return f;
}

/// ℒ_X ω for the linear field X(p) = Mp: pᵗ(MᵗC + CM)dq.
inline OneForm lie_derivative(const Matrix& M, const OneForm& w) {
  return {"L(" + w.name + ")", M.transpose() * w.C + w.C * M};
}

inline OneForm lie_derivative(const G2Element& X, const OneForm& w) { return lie_derivative(rho(X), w); }

/// The forms u·ω for a constant vector u and a triple ω.
inline OneForm dot(const Vec3& u, const std::array<OneForm, 3>& w) {
  OneForm r{"", Matrix(7, 7)};
  for (int i = 0; i < 3; ++i) r = r + u[i] * w[i];
  return r;
}

inline std::array<OneForm, 3> cross(const Vec3& u, const std::array<OneForm, 3>& w) {
  std::array<OneForm, 3> r;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    r[i] = u[j] * w[k] - u[k] * w[j];
  }
  return r;
}

inline std::array<OneForm, 3> times(const Mat3& A, const std::array<OneForm, 3>& w) {
  std::array<OneForm, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[i] = OneForm{"", Matrix(7, 7)};
    for (int j = 0; j < 3; ++j) r[i] = r[i] + A(i, j) * w[j];
  }
  return r;
}

inline std::array<OneForm, 3> scale(const Vec3& u, const OneForm& w) { return {u[0] * w, u[1] * w, u[2] * w}; }

struct CaseResidual {
  std::string name;
  bool zero;
};

inline bool same_forms(const std::array<OneForm, 3>& a, const std::array<OneForm, 3>& b) {
  for (int i = 0; i < 3; ++i)
    if (a[i].C != b[i].C) return false;
  return true;
}

inline std::array<OneForm, 3> lie_derivative(const G2Element& X, const std::array<OneForm, 3>& w) {
  Matrix M = rho(X);
  return {lie_derivative(M, w[0]), lie_derivative(M, w[1]), lie_derivative(M, w[2])};
}

/// ρ(A,0,0): ℒα = Aα, ℒβ = −Aᵗβ, ℒγ = 0.
inline std::vector<CaseResidual> case_one(const PfaffianSystem& s, const Mat3& A) {
  G2Element X = g2_from_A(A);
  return {{"L_A alpha = A alpha", same_forms(lie_derivative(X, s.alpha), times(A, s.alpha))},
          {"L_A beta = -A^t beta", same_forms(lie_derivative(X, s.beta), times(Rational(-1) * A.transpose(), s.beta))},
          {"L_A gamma = 0", lie_derivative(X, s.gamma).is_zero()}};
}

/// ρ(0,b,0): ℒα = bγ, ℒβ = b×α, ℒγ = 2 b·β.
inline std::vector<CaseResidual> case_two(const PfaffianSystem& s, const Vec3& b) {
  G2Element X = g2_from_b(b);
  return {{"L_b alpha = b gamma", same_forms(lie_derivative(X, s.alpha), scale(b, s.gamma))},
          {"L_b beta = b x alpha", same_forms(lie_derivative(X, s.beta), cross(b, s.alpha))},
          {"L_b gamma = 2 b.beta", lie_derivative(X, s.gamma).C == (Rational(2) * dot(b, s.beta)).C}};
}

/// The printed multipliers ℒβ = b×β and ℒγ = b·β.
inline std::vector<CaseResidual> case_two_as_printed(const PfaffianSystem& s, const Vec3& b) {
  G2Element X = g2_from_b(b);
  return {{"L_b beta = b x beta", same_forms(lie_derivative(X, s.beta), cross(b, s.beta))},
          {"L_b gamma = b.beta", lie_derivative(X, s.gamma).C == dot(b, s.beta).C}};
}

/// ρ(0,0,c): ℒα = −c×β, ℒβ = cγ, ℒγ = 2 c·α.
inline std::vector<CaseResidual> case_three(const PfaffianSystem& s, const Vec3& c) {
  G2Element X = g2_from_c(c);
  std::array<OneForm, 3> mcb = cross(c, s.beta);
  for (auto& f : mcb) f = Rational(-1) * f;
  return {{"L_c alpha = -c x beta", same_forms(lie_derivative(X, s.alpha), mcb)},
          {"L_c beta = c gamma", same_forms(lie_derivative(X, s.beta), scale(c, s.gamma))},
          {"L_c gamma = 2 c.alpha", lie_derivative(X, s.gamma).C == (Rational(2) * dot(c, s.alpha)).C}};
}

/// The printed case 2 with x ↔ y, b ↔ c (so α ↔ β and γ ↦ −γ): ℒβ = −cγ, ℒα = c×α, ℒγ = −c·α.
inline std::vector<CaseResidual> case_three_as_printed(const PfaffianSystem& s, const Vec3& c) {
  G2Element X = g2_from_c(c);
  return {{"L_c beta = -c gamma", same_forms(lie_derivative(X, s.beta), scale(c, Rational(-1) * s.gamma))},
          {"L_c alpha = c x alpha", same_forms(lie_derivative(X, s.alpha), cross(c, s.alpha))},
          {"L_c gamma = -c.alpha", lie_derivative(X, s.gamma).C == (Rational(-1) * dot(c, s.alpha)).C}};
}

/// Every ℒ_X of the corrected system lies in its constant-coefficient span, for each basis X.
inline bool system_invariant_under_basis(const PfaffianSystem& s) {
  std::vector<Vector> span;
  for (const auto& f : s.corrected()) span.push_back(f.C.flat());
  for (const auto& X : g2_basis())
    for (const auto& f : s.corrected())
      if (!in_span(span, lie_derivative(X, f).C.flat())) return false;
  return true;
}

/// A(u×v) + Aᵗu×v + u×Aᵗv = trA (u×v)
inline bool cross_product_lemma(const Mat3& A, const Vec3& u, const Vec3& v) {
  Mat3 At = A.transpose();
  return A * cross(u, v) + cross(At * u, v) + cross(u, At * v) == A.trace() * cross(u, v);
}

// ---------------------------------------------------------------------------
// Identities of forms with quadratic coefficients, checked as polynomials.

/// ω as 7 coefficient polynomials of dq in the coordinates p.
inline std::vector<MultiPoly> as_polynomials(const OneForm& w) {
  std::vector<MultiPoly> out(7, MultiPoly(7));
  for (int l = 0; l < 7; ++l)
    for (int k = 0; k < 7; ++k)
      if (!w.C(l, k).is_zero()) out[k] += w.C(l, k) * MultiPoly::variable(7, l);
  return out;
}

/// x·β − y·α − zγ, which vanishes identically.
inline std::vector<MultiPoly> gamma_identity_residual(const PfaffianSystem& s) {
  std::vector<MultiPoly> r(7, MultiPoly(7));
  auto acc = [&](const MultiPoly& m, const OneForm& w) {
    auto p = as_polynomials(w);
    for (int k = 0; k < 7; ++k) r[k] += m * p[k];
  };
  for (int i = 0; i < 3; ++i) {
    acc(MultiPoly::variable(7, xi(i)), s.beta[i]);
    acc(-MultiPoly::variable(7, yi(i)), s.alpha[i]);
  }
  acc(-MultiPoly::variable(7, kZ), s.gamma);
  return r;
}

inline bool all_zero(const std::vector<MultiPoly>& ps) {
  for (const auto& p : ps)
    if (!p.is_zero()) return false;
  return true;
}

/// (x,y,z)(dx,dy,dz) has imaginary part (−α, β, −½γ) and real part ½(γ₁+γ₂).
struct ProductIdentity {
  bool imaginary_matches = false;
  bool real_matches = false;
};

inline ProductIdentity product_identity(const PfaffianSystem& s, const Vector& p, const Vector& dq) {
  auto [im, re] = cartan_coordinate_product(CartanPoint::from(p), CartanPoint::from(dq));
  ProductIdentity r;
  r.imaginary_matches = true;
  for (int i = 0; i < 3; ++i) {
    if (im.x[i] != -s.alpha[i](p, dq)) r.imaginary_matches = false;
    if (im.y[i] != s.beta[i](p, dq)) r.imaginary_matches = false;
  }
  if (im.z != Rational(-1, 2) * s.gamma(p, dq)) r.imaginary_matches = false;
  r.real_matches = re == Rational(1, 2) * (s.gamma1(p, dq) + s.gamma2(p, dq));
  return r;
}

// ---------------------------------------------------------------------------
// Rank at a point.

inline std::vector<Vector> kernel_at(const FormList& forms, const Vector& p) {
  std::vector<Vector> rows;
  for (const auto& f : forms) rows.push_back(f.row_at(p));
  return kernel_basis(Matrix::from_rows(rows, 7));
}

/// Kernel dimension of the forms at p.
inline std::size_t system_rank_at(const FormList& forms, const Vector& p) { return kernel_at(forms, p).size(); }

/// "x1,0,0" style: each of x, y, z is 0, a basis label e1..e3 / x1..x3 / y1..y3 for the matching block, or a number for z.
inline Vector parse_cartan_point(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '(' && ch != ')') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3 && parts.size() != 7) throw ParseError("expected 3 blocks or 7 coordinates: " + text);
  if (parts.size() == 7) {
    Vector v;
    for (const auto& s : parts) v.push_back(Rational::parse(s));
    return v;
  }
  Vector p = zero_vector(7);
  for (int blk = 0; blk < 2; ++blk) {
    const std::string& s = parts[blk];
    if (s == "0") continue;
    if (s.size() == 2 && (s[0] == 'e' || s[0] == 'x' || s[0] == 'y') && s[1] >= '1' && s[1] <= '3') {
      p[3 * blk + (s[1] - '1')] = 1;
      continue;
    }
    throw ParseError("bad block '" + s + "'");
  }
  p[6] = Rational::parse(parts[2]);
  return p;
}

struct CorrectionReport {
  bool gamma_identity = false;     // x·β − y·α = zγ
  bool dj_identity = false;        // γ₁ + γ₂ = dJ
  bool cone_consequence = true;    // on J = 0: ker(γ, dJ) ⊂ ker γ₁ ∩ ker γ₂
  bool z_consequence = true;       // z ≠ 0: ker(α,β) = ker(α,β,γ)
  bool kernel_is_annihilator = true;  // ker(α,β,γ) = x⁰
  std::size_t points = 0;
};

/// Kernel of left multiplication by p, in Cartan coordinates.
inline std::vector<Vector> annihilator_cartan(const Vector& p) {
  std::vector<Vector> out;
  for (const auto& v : annihilator(to_octonion(CartanPoint::from(p)))) out.push_back(chart_a_to_b(v));
  return out;
}

inline Vector sample_null_cartan(Rng& rng) { return chart_a_to_b(chart_a(sample_null(rng))); }

inline CorrectionReport correction_identities(const PfaffianSystem& s, Rng& rng, int samples) {
  CorrectionReport r;
  r.gamma_identity = all_zero(gamma_identity_residual(s));
  r.dj_identity = (s.gamma1 + s.gamma2).C == dJ().C;
  for (int t = 0; t < samples; ++t) {
    Vector p = sample_null_cartan(rng);
    ++r.points;
    auto cone = kernel_at({s.gamma, dJ()}, p);
    for (const auto& v : cone)
      if (!s.gamma1(p, v).is_zero() || !s.gamma2(p, v).is_zero()) r.cone_consequence = false;
    if (!p[6].is_zero() && !spans_equal(kernel_at(s.alpha_beta(), p), kernel_at(s.corrected(), p)))
      r.z_consequence = false;
    if (!spans_equal(kernel_at(s.corrected(), p), annihilator_cartan(p))) r.kernel_is_annihilator = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Null 3-planes: x − za + b×y = 0, y − zb + a×x = 0 with a·b = −1.

inline std::vector<Vector> null_threeplane_family(const Vec3& a, const Vec3& b) {
  if (dot(a, b) != -1) throw BadParameters("need a.b = -1, got " + dot(a, b).str());
  std::vector<Vector> rows;
  Mat3 hb = hat(b), ha = hat(a);
  for (int i = 0; i < 3; ++i) {
    Vector r = zero_vector(7);
    r[xi(i)] = 1;
    for (int j = 0; j < 3; ++j) r[yi(j)] = hb(i, j);
    r[kZ] = -a[i];
    rows.push_back(r);
  }
  for (int i = 0; i < 3; ++i) {
    Vector r = zero_vector(7);
    r[yi(i)] = 1;
    for (int j = 0; j < 3; ++j) r[xi(j)] = ha(i, j);
    r[kZ] = -b[i];
    rows.push_back(r);
  }
  return kernel_basis(Matrix::from_rows(rows, 7));
}

/// J vanishes on the span: on each basis vector and on each pair.
inline bool is_totally_null(const std::vector<Vector>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!J(CartanPoint::from(basis[i]), CartanPoint::from(basis[j])).is_zero()) return false;
  return true;
}

/// (a, b) with the plane equal to the family member, if one exists.
inline std::optional<std::pair<Vec3, Vec3>> recover_parameters(const std::vector<Vector>& plane) {
  // unknowns (a, b): z a − b×y = x and z b − a×x = y for every basis vector (x, y, z)
  std::vector<Vector> rows;
  Vector rhs;
  for (const auto& v : plane) {
    Vec3 x = Vec3::from(v, 0), y = Vec3::from(v, 3);
    const Rational& z = v[6];
    Mat3 hy = hat(y), hx = hat(x);  // b×y = −ŷ b, a×x = −x̂ a
    for (int i = 0; i < 3; ++i) {
      Vector r = zero_vector(6);
      r[i] = z;
      for (int j = 0; j < 3; ++j) r[3 + j] = hy(i, j);
      rows.push_back(r);
      rhs.push_back(x[i]);
    }
    for (int i = 0; i < 3; ++i) {
      Vector r = zero_vector(6);
      r[3 + i] = z;
      for (int j = 0; j < 3; ++j) r[j] = hx(i, j);
      rows.push_back(r);
      rhs.push_back(y[i]);
    }
  }
  Matrix m = Matrix::from_rows(rows, 6);
  if (m.rank() < 6) return std::nullopt;
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  Vec3 a = Vec3::from(*sol, 0), b = Vec3::from(*sol, 3);
  if (dot(a, b) != -1) return std::nullopt;
  return std::make_pair(a, b);
}

/// A pair with a·b = −1: b = −a/|a|² + (a × w).
inline std::pair<Vec3, Vec3> sample_family_parameters(Rng& rng) {
  Vec3 a;
  while (a.is_zero()) a = rng.vec3(3, 3);
  Vec3 w = rng.vec3(2, 2);
  Vec3 b = (Rational(-1) / a.norm2()) * a + cross(a, w);
  return {a, b};
}

struct PlaneImage {
  bool dimension_three = false;
  bool null = false;
  std::optional<std::pair<Vec3, Vec3>> parameters;  // nullopt: outside the chart
  bool matches_family = false;
};

inline PlaneImage carry_plane(const Matrix& g, const std::vector<Vector>& plane) {
  PlaneImage r;
  std::vector<Vector> image;
  for (const auto& v : plane) image.push_back(g * v);
  r.dimension_three = span_rank(image) == 3;
  r.null = is_totally_null(image);
  r.parameters = recover_parameters(image);
  if (r.parameters) r.matches_family = spans_equal(image, null_threeplane_family(r.parameters->first, r.parameters->second));
  return r;
}

}  // namespace g2roll
