#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "g2roll/error.hpp"

namespace g2roll {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP so numerators never overflow.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit by design of the numeric tower

  template <std::integral I, std::integral J>
  Rational(I num, J den) : value_(static_cast<long>(num), static_cast<unsigned long>(1)) {
    if (den == 0) throw SingularMatrix("zero denominator");
    value_ /= mpq_class(static_cast<long>(den));
    value_.canonicalize();
  }

  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "n", "-n", "n/d" or a finite decimal such as "0.25".
  static Rational parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw ParseError("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::string den = "1" + std::string(s.size() - dot - 1, '0');
      s = digits + "/" + den;
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("not a rational literal: '" + std::string(text) + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  double to_double() const { return value_.get_d(); }

  std::string str() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw SingularMatrix("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact power with integer exponent (negative exponents invert).
inline Rational pow(const Rational& base, int exponent) {
  Rational result(1);
  Rational b = exponent < 0 ? Rational(1) / base : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) result *= b;
  return result;
}

}  // namespace g2roll
