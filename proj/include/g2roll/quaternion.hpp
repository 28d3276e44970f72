#pragma once

#include <ostream>

#include "g2roll/exact/matrix.hpp"
#include "g2roll/exact/rational.hpp"

namespace g2roll {

struct Quaternion {
  Rational r, i, j, k;

  Quaternion() = default;
  Quaternion(Rational r_, Rational i_, Rational j_, Rational k_)
      : r(std::move(r_)), i(std::move(i_)), j(std::move(j_)), k(std::move(k_)) {}

  static Quaternion real(const Rational& a) { return {a, 0, 0, 0}; }
  static Quaternion imaginary(const Vec3& v) { return {0, v[0], v[1], v[2]}; }
  /// 1, i, j, k for n = 0..3
  static Quaternion unit(int n) {
    Quaternion q;
    q[n] = 1;
    return q;
  }

  Rational& operator[](int n) { return n == 0 ? r : n == 1 ? i : n == 2 ? j : k; }
  const Rational& operator[](int n) const { return n == 0 ? r : n == 1 ? i : n == 2 ? j : k; }

  Vec3 im() const { return {i, j, k}; }
  Quaternion conj() const { return {r, -i, -j, -k}; }
  Rational norm2() const { return r * r + i * i + j * j + k * k; }
  bool is_zero() const { return r.is_zero() && i.is_zero() && j.is_zero() && k.is_zero(); }
  Vector to_vector() const { return {r, i, j, k}; }

  Quaternion inverse() const {
    Rational n = norm2();
    if (n.is_zero()) throw SingularMatrix("inverse of zero quaternion");
    return (Rational(1) / n) * conj();
  }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.r + b.r, a.i + b.i, a.j + b.j, a.k + b.k};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.r - b.r, a.i - b.i, a.j - b.j, a.k - b.k};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a.r, -a.i, -a.j, -a.k}; }
  friend Quaternion operator*(const Rational& s, const Quaternion& a) { return {s * a.r, s * a.i, s * a.j, s * a.k}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k, a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
            a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i, a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r};
  }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.r << "," << q.i << "," << q.j << "," << q.k << ")";
  }
};

/// Rotation v ↦ q v q̄ of Im ℍ for a unit quaternion q.
inline Mat3 rotation_of(const Quaternion& q) {
  Mat3 m;
  for (int col = 0; col < 3; ++col) {
    Vec3 image = (q * Quaternion::unit(col + 1) * q.conj()).im();
    for (int row = 0; row < 3; ++row) m(row, col) = image[row];
  }
  return m;
}

}  // namespace g2roll
