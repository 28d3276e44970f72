#pragma once

#include <array>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "g2roll/error.hpp"
#include "g2roll/exact/matrix.hpp"
#include "g2roll/quaternion.hpp"

namespace g2roll {

/// Split octonion (a, b) ∈ ℍ² with (a,b)(c,d) = (ac + d̄b, da + bc̄).
struct SplitOctonion {
  Quaternion a, b;

  static SplitOctonion one() { return {Quaternion::real(1), {}}; }
  static SplitOctonion real(const Rational& s) { return {Quaternion::real(s), {}}; }

  SplitOctonion conj() const { return {a.conj(), -b}; }
  const Rational& re() const { return a.r; }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_imaginary() const { return a.r.is_zero(); }
  Vector to_vector() const { return {a.r, a.i, a.j, a.k, b.r, b.i, b.j, b.k}; }

  friend SplitOctonion operator+(const SplitOctonion& x, const SplitOctonion& y) { return {x.a + y.a, x.b + y.b}; }
  friend SplitOctonion operator-(const SplitOctonion& x, const SplitOctonion& y) { return {x.a - y.a, x.b - y.b}; }
  friend SplitOctonion operator-(const SplitOctonion& x) { return {-x.a, -x.b}; }
  friend SplitOctonion operator*(const Rational& s, const SplitOctonion& x) { return {s * x.a, s * x.b}; }
  friend bool operator==(const SplitOctonion&, const SplitOctonion&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SplitOctonion& x) { return os << "(" << x.a << "," << x.b << ")"; }
};

inline SplitOctonion oct_mul(const SplitOctonion& x, const SplitOctonion& y) {
  const Quaternion &a = x.a, &b = x.b, &c = y.a, &d = y.b;
  return {a * c + d.conj() * b, d * a + b * c.conj()};
}

inline SplitOctonion operator*(const SplitOctonion& x, const SplitOctonion& y) { return oct_mul(x, y); }

/// ⟨x,y⟩ = Re(x ȳ)
inline Rational inner_product(const SplitOctonion& x, const SplitOctonion& y) { return (x * y.conj()).re(); }

// ---------------------------------------------------------------------------
// Basis of V = Im õ: e_i = ½(q_i, q_i), f_i = ½(q_i, −q_i), U = (0, 1).

inline constexpr std::array<const char*, 7> kBasisNames = {"e1", "e2", "e3", "f1", "f2", "f3", "U"};

inline SplitOctonion basis_e(int i) {
  Quaternion q = Rational(1, 2) * Quaternion::unit(i + 1);
  return {q, q};
}
inline SplitOctonion basis_f(int i) {
  Quaternion q = Rational(1, 2) * Quaternion::unit(i + 1);
  return {q, -q};
}
inline SplitOctonion basis_U() { return {{}, Quaternion::real(1)}; }

/// Basis element n of V in the order e1,e2,e3,f1,f2,f3,U.
inline SplitOctonion basis_element(int n) {
  if (n < 3) return basis_e(n);
  if (n < 6) return basis_f(n - 3);
  return basis_U();
}

/// Chart A: coefficients over (e1,e2,e3,f1,f2,f3,U).
inline SplitOctonion from_chart_a(const Vector& c) {
  if (c.size() != 7) throw DimensionMismatch("chart A expects 7 coordinates");
  SplitOctonion r;
  for (int n = 0; n < 7; ++n)
    if (!c[n].is_zero()) r = r + c[n] * basis_element(n);
  return r;
}

/// Chart A coordinates of the imaginary part; the real part is returned separately.
inline std::pair<Vector, Rational> to_chart_a(const SplitOctonion& x) {
  Vec3 av = x.a.im(), bv = x.b.im();
  Vector c(7);
  for (int i = 0; i < 3; ++i) {
    c[i] = av[i] + bv[i];
    c[3 + i] = av[i] - bv[i];
  }
  c[6] = x.b.r;
  return {c, x.a.r};
}

/// Cartan coordinates (chart B): p = Σ x_i E_i + Σ y_i f_i + z U with E_i = −e_i.
struct CartanPoint {
  Vec3 x, y;
  Rational z;

  static CartanPoint from(const Vector& v) {
    if (v.size() != 7) throw DimensionMismatch("Cartan coordinates expect 7 entries");
    return {Vec3::from(v, 0), Vec3::from(v, 3), v[6]};
  }
  Vector to_vector() const { return {x[0], x[1], x[2], y[0], y[1], y[2], z}; }
  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  friend CartanPoint operator+(const CartanPoint& p, const CartanPoint& q) { return {p.x + q.x, p.y + q.y, p.z + q.z}; }
  friend CartanPoint operator-(const CartanPoint& p, const CartanPoint& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
  friend CartanPoint operator*(const Rational& s, const CartanPoint& p) { return {s * p.x, s * p.y, s * p.z}; }
  friend bool operator==(const CartanPoint&, const CartanPoint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const CartanPoint& p) {
    return os << "(" << p.x << "," << p.y << "," << p.z << ")";
  }
};

inline Vector chart_a_to_b(const Vector& a) {
  if (a.size() != 7) throw DimensionMismatch("chart A expects 7 coordinates");
  return {-a[0], -a[1], -a[2], a[3], a[4], a[5], a[6]};
}
inline Vector chart_b_to_a(const Vector& b) { return chart_a_to_b(b); }

inline SplitOctonion to_octonion(const CartanPoint& p) { return from_chart_a(chart_b_to_a(p.to_vector())); }

inline std::pair<CartanPoint, Rational> to_cartan(const SplitOctonion& x) {
  auto [a, re] = to_chart_a(x);
  return {CartanPoint::from(chart_a_to_b(a)), re};
}

/// J = z² + x·y
inline Rational J(const CartanPoint& p) { return p.z * p.z + dot(p.x, p.y); }

/// Symmetric bilinear form polarizing J: J(p,q) = zz′ + ½(x·y′ + x′·y).
inline Rational J(const CartanPoint& p, const CartanPoint& q) {
  return p.z * q.z + Rational(1, 2) * (dot(p.x, q.y) + dot(q.x, p.y));
}

/// Gram matrix of J on Cartan coordinates.
inline Matrix j_gram() {
  Matrix g(7, 7);
  for (int i = 0; i < 3; ++i) g(i, 3 + i) = g(3 + i, i) = Rational(1, 2);
  g(6, 6) = 1;
  return g;
}

/// Gram matrix of ⟨x,y⟩ = Re(xȳ) on chart A.
inline Matrix inner_product_gram_chart_a() {
  Matrix g(7, 7);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) g(r, c) = inner_product(basis_element(r), basis_element(c));
  return g;
}

/// Product of imaginary octonions in Cartan coordinates, split into imaginary and real parts:
///   Im = (−y×y′ − zx′ + z′x, x×x′ + zy′ − z′y, ½(x′·y − x·y′))
///   Re = zz′ + ½(x·y′ + x′·y)
inline std::pair<CartanPoint, Rational> cartan_coordinate_product(const CartanPoint& p, const CartanPoint& q) {
  CartanPoint im{-cross(p.y, q.y) - p.z * q.x + q.z * p.x,
                 cross(p.x, q.x) + p.z * q.y - q.z * p.y, Rational(1, 2) * (dot(q.x, p.y) - dot(p.x, q.y))};
  return {im, J(p, q)};
}

// ---------------------------------------------------------------------------

/// One product of basis elements: real part plus chart A coordinates.
struct TableEntry {
  Rational real;
  Vector imag;  // chart A

  friend bool operator==(const TableEntry&, const TableEntry&) = default;

  std::string str() const {
    std::string s;
    auto term = [&s](const Rational& c, const std::string& name) {
      if (c.is_zero()) return;
      Rational a = abs(c);
      if (s.empty())
        s += c.sign() < 0 ? "-" : "";
      else
        s += c.sign() < 0 ? " - " : " + ";
      if (name.empty())
        s += a.str();
      else if (a == 1)
        s += name;
      else
        s += a.str() + " " + name;
    };
    term(real, "");
    for (int n = 0; n < 7; ++n) term(imag[n], kBasisNames[n]);
    return s.empty() ? "0" : s;
  }
};

using MultiplicationTable = std::array<std::array<TableEntry, 7>, 7>;

inline TableEntry table_entry(const SplitOctonion& x) {
  auto [c, re] = to_chart_a(x);
  return {re, c};
}

/// The table as it should read: e_i² = f_i² = 0, e_i e_j = f_k, f_i f_j = e_k (cyclic, antisymmetric),
/// e_i f_j = f_i e_j = 0 (i ≠ j), e_i f_i = −½ + ½U, f_i e_i = −½ − ½U, e_iU = e_i, f_iU = −f_i,
/// Ue_i = −e_i, Uf_i = f_i, U² = 1.
inline MultiplicationTable expected_multiplication_table() {
  MultiplicationTable t;
  for (auto& row : t)
    for (auto& e : row) e = {Rational(0), zero_vector(7)};
  auto eps = [](int i, int j) -> int {
    if ((j - i + 3) % 3 == 1) return 1;
    if ((i - j + 3) % 3 == 1) return -1;
    return 0;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        t[i][3 + i] = {Rational(-1, 2), unit_vector(7, 6)};
        t[i][3 + i].imag[6] = Rational(1, 2);
        t[3 + i][i] = {Rational(-1, 2), zero_vector(7)};
        t[3 + i][i].imag[6] = Rational(-1, 2);
        continue;
      }
      int k = 3 - i - j;
      t[i][j].imag[3 + k] = eps(i, j);
      t[3 + i][3 + j].imag[k] = eps(i, j);
    }
  for (int i = 0; i < 3; ++i) {
    t[i][6].imag[i] = 1;
    t[3 + i][6].imag[3 + i] = -1;
    t[6][i].imag[i] = -1;
    t[6][3 + i].imag[3 + i] = 1;
  }
  t[6][6].real = 1;
  return t;
}

/// Computes all 49 basis products and compares them against the expected table.
inline MultiplicationTable basis_multiplication_table() {
  MultiplicationTable computed;
  const MultiplicationTable expected = expected_multiplication_table();
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) {
      computed[r][c] = table_entry(basis_element(r) * basis_element(c));
      if (computed[r][c] != expected[r][c])
        throw TableMismatch(std::string(kBasisNames[r]) + "*" + kBasisNames[c] + " = " + computed[r][c].str() +
                            ", expected " + expected[r][c].str());
    }
  return computed;
}

/// Plain-text rendering, one row per left factor.
inline std::string format_multiplication_table(const MultiplicationTable& t) {
  std::string out;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c)
      out += std::string(kBasisNames[r]) + " * " + kBasisNames[c] + " = " + t[r][c].str() + "\n";
  return out;
}

}  // namespace g2roll
