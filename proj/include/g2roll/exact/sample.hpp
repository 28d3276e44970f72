#pragma once

#include <cstdint>
#include <random>

#include "g2roll/exact/matrix.hpp"
#include "g2roll/exact/rational.hpp"
#include "g2roll/quaternion.hpp"

namespace g2roll {

/// Deterministic source of small rationals. Integers are taken straight from
/// the engine output so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  /// n/d with |n| ≤ max_num and 1 ≤ d ≤ max_den.
  Rational rational(long max_num = 5, long max_den = 4) {
    long n = integer(-max_num, max_num);
    long d = integer(1, max_den);
    return Rational(n, d);
  }

  Rational nonzero_rational(long max_num = 5, long max_den = 4) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  Vec3 vec3(long max_num = 5, long max_den = 4) {
    Rational a = rational(max_num, max_den);
    Rational b = rational(max_num, max_den);
    Rational c = rational(max_num, max_den);
    return {a, b, c};
  }

  Vector vector(std::size_t n, long max_num = 5, long max_den = 4) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(max_num, max_den));
    return v;
  }

  Mat3 traceless(long max_num = 5, long max_den = 4) {
    Mat3 a;
    for (auto& x : a.m) x = rational(max_num, max_den);
    a(2, 2) = -a(0, 0) - a(1, 1);
    return a;
  }

 private:
  std::mt19937_64 engine_;
};

/// Cayley transform (I − S)(I + S)⁻¹ of an antisymmetric S; always in SO(3).
inline Mat3 cayley(const Vec3& w) {
  Mat3 s = hat(w);
  return (Mat3::identity() - s) * (Mat3::identity() + s).inverse();
}

inline Mat3 sample_so3(Rng& rng) { return cayley(rng.vec3(3, 3)); }

inline Mat3 sample_so3(std::uint64_t seed) {
  Rng rng(seed);
  return sample_so3(rng);
}

/// ((1 − |w|²) + 2w)/(1 + |w|²), a unit quaternion with rational entries.
inline Quaternion sample_unit_quaternion(const Vec3& w) {
  Rational n = w.norm2();
  Rational s = Rational(1) / (1 + n);
  return {(1 - n) * s, 2 * w[0] * s, 2 * w[1] * s, 2 * w[2] * s};
}

inline Quaternion sample_unit_quaternion(Rng& rng) { return sample_unit_quaternion(rng.vec3(3, 3)); }

/// Inverse stereographic projection from the south pole: (2a, 2b, 1 − a² − b²)/(1 + a² + b²).
inline Vec3 sample_s2(const Rational& a, const Rational& b) {
  Rational n = a * a + b * b;
  Rational s = Rational(1) / (1 + n);
  return {2 * a * s, 2 * b * s, (1 - n) * s};
}

/// A rational point of S² away from both poles ±e₃.
inline Vec3 sample_s2_off_poles(Rng& rng) {
  for (;;) {
    Vec3 x = sample_s2(rng.rational(3, 3), rng.rational(3, 3));
    if (!(x[0].is_zero() && x[1].is_zero())) return x;
  }
}

}  // namespace g2roll
