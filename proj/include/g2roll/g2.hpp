#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "g2roll/error.hpp"
#include "g2roll/exact/matrix.hpp"
#include "g2roll/octonion.hpp"

namespace g2roll {

/// Element of g₂ ⊂ End(V) stored as (A, b, c) with tr A = 0.
struct G2Element {
  Mat3 A;
  Vec3 b, c;

  static constexpr std::size_t kCoords = 15;

  /// Flattened coordinates: A row-major (9), then b (3), then c (3).
  Vector to_vector() const {
    Vector v = A.to_vector();
    for (int i = 0; i < 3; ++i) v.push_back(b[i]);
    for (int i = 0; i < 3; ++i) v.push_back(c[i]);
    return v;
  }
  static G2Element from_vector(const Vector& v) {
    if (v.size() != kCoords) throw DimensionMismatch("g2 element expects 15 coordinates");
    return {Mat3::from(v, 0), Vec3::from(v, 9), Vec3::from(v, 12)};
  }

  bool is_zero() const { return A.is_zero() && b.is_zero() && c.is_zero(); }

  friend G2Element operator+(const G2Element& u, const G2Element& v) { return {u.A + v.A, u.b + v.b, u.c + v.c}; }
  friend G2Element operator-(const G2Element& u, const G2Element& v) { return {u.A - v.A, u.b - v.b, u.c - v.c}; }
  friend G2Element operator-(const G2Element& u) { return {-u.A, -u.b, -u.c}; }
  friend G2Element operator*(const Rational& s, const G2Element& u) { return {s * u.A, s * u.b, s * u.c}; }
  friend bool operator==(const G2Element&, const G2Element&) = default;
  friend std::ostream& operator<<(std::ostream& os, const G2Element& u) { return os << to_string(u.to_vector()); }
};

inline G2Element g2_from_A(const Mat3& a) { return {a, {}, {}}; }
inline G2Element g2_from_b(const Vec3& b) { return {{}, b, {}}; }
inline G2Element g2_from_c(const Vec3& c) { return {{}, {}, c}; }

/// The 7×7 block matrix acting on the column (x₁,x₂,x₃,y₁,y₂,y₃,z):
///   [ A     R_c   2b ]
///   [ −R_b  −Aᵗ  −2c ]
///   [ cᵗ    −bᵗ   0  ]
inline Matrix rho(const Mat3& A, const Vec3& b, const Vec3& c) {
  if (!A.trace().is_zero()) throw NonTraceless("trace(A) = " + A.trace().str());
  Matrix m(7, 7);
  Mat3 rc = hat(c), rb = hat(b), at = A.transpose();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(i, j) = A(i, j);
      m(i, 3 + j) = rc(i, j);
      m(3 + i, j) = -rb(i, j);
      m(3 + i, 3 + j) = -at(i, j);
    }
    m(i, 6) = 2 * b[i];
    m(3 + i, 6) = -2 * c[i];
    m(6, i) = c[i];
    m(6, 3 + i) = -b[i];
  }
  return m;
}

inline Matrix rho(const G2Element& u) { return rho(u.A, u.b, u.c); }

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Reads (A,b,c) back from a 7×7 matrix; nullopt when the matrix is not in the image of ρ.
inline std::optional<G2Element> from_matrix(const Matrix& m) {
  if (m.rows() != 7 || m.cols() != 7) throw DimensionMismatch("expected a 7x7 matrix");
  G2Element u;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) u.A(i, j) = m(i, j);
    u.b[i] = Rational(1, 2) * m(i, 6);
    u.c[i] = m(6, i);
  }
  if (!u.A.trace().is_zero()) return std::nullopt;
  if (rho(u) != m) return std::nullopt;
  return u;
}

/// Closed-form bracket:
///   A″ = [A,A′] + 3(bc′ᵗ − b′cᵗ) − (b·c′ − b′·c) I
///   b″ = Ab′ − A′b − 2 c×c′
///   c″ = −Aᵗc′ + A′ᵗc + 2 b×b′
inline G2Element bracket(const G2Element& u, const G2Element& v) {
  G2Element r;
  r.A = u.A * v.A - v.A * u.A + Rational(3) * (outer(u.b, v.c) - outer(v.b, u.c)) -
        (dot(u.b, v.c) - dot(v.b, u.c)) * Mat3::identity();
  r.b = u.A * v.b - v.A * u.b - Rational(2) * cross(u.c, v.c);
  r.c = -(u.A.transpose() * v.c) + v.A.transpose() * u.c + Rational(2) * cross(u.b, v.b);
  return r;
}

/// Bracket through 7×7 commutators, checked against the closed form.
inline G2Element checked_bracket(const G2Element& u, const G2Element& v) {
  Matrix comm = commutator(rho(u), rho(v));
  auto back = from_matrix(comm);
  if (!back) throw ClosureViolation("commutator of " + to_string(u.to_vector()) + " and " + to_string(v.to_vector()));
  if (*back != bracket(u, v)) throw ClosureViolation("closed-form bracket disagrees with the commutator");
  return *back;
}

/// A fixed basis of g₂: off-diagonal E_ij (6), diag(1,−1,0), diag(0,1,−1), b = e_i (3), c = e_i (3).
inline std::vector<G2Element> g2_basis() {
  std::vector<G2Element> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) out.push_back(g2_from_A(Mat3::unit(i, j)));
  out.push_back(g2_from_A(Mat3::diag(1, -1, 0)));
  out.push_back(g2_from_A(Mat3::diag(0, 1, -1)));
  for (int i = 0; i < 3; ++i) out.push_back(g2_from_b(Vec3::unit(i)));
  for (int i = 0; i < 3; ++i) out.push_back(g2_from_c(Vec3::unit(i)));
  return out;
}

inline std::vector<Vector> to_vectors(const std::vector<G2Element>& us) {
  std::vector<Vector> out;
  for (const auto& u : us) out.push_back(u.to_vector());
  return out;
}

inline std::vector<G2Element> to_elements(const std::vector<Vector>& vs) {
  std::vector<G2Element> out;
  for (const auto& v : vs) out.push_back(G2Element::from_vector(v));
  return out;
}

/// Matrix of ad(u) in the coordinates of g2_basis().
inline Matrix ad_matrix(const G2Element& u, const std::vector<G2Element>& basis) {
  std::vector<Vector> cols;
  std::vector<Vector> bvecs = to_vectors(basis);
  for (const auto& e : basis) {
    auto c = coordinates_in(bvecs, bracket(u, e).to_vector());
    if (!c) throw ClosureViolation("ad image outside the span of the basis");
    cols.push_back(*c);
  }
  return Matrix::from_columns(cols, basis.size());
}

// ---------------------------------------------------------------------------
// Cartan's 15 linear vector fields, read as matrices: coefficient of ∂_k that is
// linear in p_l becomes the entry (k, l).

struct CartanOperator {
  std::string label;
  Matrix matrix;
};

namespace detail {
inline std::size_t xi(int i) { return static_cast<std::size_t>(i); }
inline std::size_t yi(int i) { return static_cast<std::size_t>(3 + i); }
inline constexpr std::size_t kZ = 6;
}  // namespace detail

/// X_ii = −x_i∂x_i + y_i∂y_i + ⅓ Σ_j (x_j∂x_j − y_j∂y_j)
inline Matrix cartan_X_diag(int i) {
  using namespace detail;
  Matrix m(7, 7);
  for (int j = 0; j < 3; ++j) {
    m(xi(j), xi(j)) += Rational(1, 3);
    m(yi(j), yi(j)) -= Rational(1, 3);
  }
  m(xi(i), xi(i)) -= 1;
  m(yi(i), yi(i)) += 1;
  return m;
}

/// X_i0 = 2z∂x_i − y_i∂z − x_j∂y_k + x_k∂y_j, (ijk) cyclic
inline Matrix cartan_X_i0(int i) {
  using namespace detail;
  int j = (i + 1) % 3, k = (i + 2) % 3;
  Matrix m(7, 7);
  m(xi(i), kZ) = 2;
  m(kZ, yi(i)) = -1;
  m(yi(k), xi(j)) = -1;
  m(yi(j), xi(k)) = 1;
  return m;
}

/// X_0i = −2z∂y_i + x_i∂z + y_j∂x_k − y_k∂x_j, (ijk) cyclic
inline Matrix cartan_X_0i(int i) {
  using namespace detail;
  int j = (i + 1) % 3, k = (i + 2) % 3;
  Matrix m(7, 7);
  m(yi(i), kZ) = -2;
  m(kZ, xi(i)) = 1;
  m(xi(k), yi(j)) = 1;
  m(xi(j), yi(k)) = -1;
  return m;
}

/// X_ij = −x_j∂x_i + y_i∂y_j, i ≠ j
inline Matrix cartan_X_offdiag(int i, int j) {
  using namespace detail;
  Matrix m(7, 7);
  m(xi(i), xi(j)) = -1;
  m(yi(j), yi(i)) = 1;
  return m;
}

/// X_ij for any i, j (diagonal included).
inline Matrix cartan_X(int i, int j) { return i == j ? cartan_X_diag(i) : cartan_X_offdiag(i, j); }

/// All 15 operators: X_11, X_22, X_33, X_10, X_20, X_30, X_01, X_02, X_03, then X_ij (i≠j).
inline std::vector<CartanOperator> cartan_operators() {
  std::vector<CartanOperator> ops;
  for (int i = 0; i < 3; ++i) ops.push_back({"X" + std::to_string(i + 1) + std::to_string(i + 1), cartan_X_diag(i)});
  for (int i = 0; i < 3; ++i) ops.push_back({"X" + std::to_string(i + 1) + "0", cartan_X_i0(i)});
  for (int i = 0; i < 3; ++i) ops.push_back({"X0" + std::to_string(i + 1), cartan_X_0i(i)});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) ops.push_back({"X" + std::to_string(i + 1) + std::to_string(j + 1), cartan_X_offdiag(i, j)});
  return ops;
}

/// −Σ a_ij X_ij + Σ b_i X_i0 + Σ c_i X_0i
inline Matrix cartan_expansion(const G2Element& u) {
  Matrix m(7, 7);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      if (!u.A(i, j).is_zero()) m -= u.A(i, j) * cartan_X(i, j);
    if (!u.b[i].is_zero()) m += u.b[i] * cartan_X_i0(i);
    if (!u.c[i].is_zero()) m += u.c[i] * cartan_X_0i(i);
  }
  return m;
}

/// Mᵗ G + G M = 0 for the Gram matrix G of J.
inline bool is_J_antisymmetric(const Matrix& m) {
  Matrix g = j_gram();
  return (m.transpose() * g + g * m).is_zero();
}

/// Σ ρ(u)ⁿ/n!, valid when ρ(u)⁷ = 0.
inline Matrix exp_nilpotent(const G2Element& u) {
  Matrix n = rho(u);
  if (!n.pow(7).is_zero()) throw NotNilpotent(to_string(u.to_vector()));
  Matrix result = Matrix::identity(7);
  Matrix term = Matrix::identity(7);
  for (int k = 1; k < 7; ++k) {
    term = Rational(1, k) * (term * n);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

/// Torus element acting on e_i, f_i by t_i, 1/t_i (chart B: x_i scaled by t_i, y_i by 1/t_i); needs t₁t₂t₃ = 1.
inline Matrix torus_element(const Rational& t1, const Rational& t2) {
  Rational t3 = Rational(1) / (t1 * t2);
  Matrix m = Matrix::identity(7);
  Rational t[3] = {t1, t2, t3};
  for (int i = 0; i < 3; ++i) {
    m(i, i) = t[i];
    m(3 + i, 3 + i) = Rational(1) / t[i];
  }
  return m;
}

inline CartanPoint apply(const Matrix& g, const CartanPoint& p) { return CartanPoint::from(g * p.to_vector()); }

}  // namespace g2roll
