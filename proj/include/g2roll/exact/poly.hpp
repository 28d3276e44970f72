#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "g2roll/error.hpp"
#include "g2roll/exact/matrix.hpp"
#include "g2roll/exact/rational.hpp"

namespace g2roll {

/// Polynomial in a fixed number of variables with rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DimensionMismatch("variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rational(1));
    return p;
  }
  /// Linear form Σ coeffs[i] x_i.
  static MultiPoly linear(const Vector& coeffs) {
    MultiPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) p += coeffs[i] * variable(coeffs.size(), i);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (auto k : e) s += k;
      if (s > d) d = s;
    }
    return d;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw DimensionMismatch("monomial arity");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return Rational(-1) * a; }
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly derivative(std::size_t i) const {
    if (i >= nvars_) throw DimensionMismatch("derivative index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents d = e;
      --d[i];
      r.add_term(d, Rational(static_cast<long>(e[i])) * c);
    }
    return r;
  }

  Rational evaluate(const Vector& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("evaluation point arity");
    Rational s;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      s += t;
    }
    return s;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str();
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        s += "*" + (i < names.size() ? names[i] : "v" + std::to_string(i));
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

 private:
  void check(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw DimensionMismatch("polynomials over different variable sets");
  }

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// A polynomial vector field: one component per variable.
using PolyField = std::vector<MultiPoly>;

/// Lie bracket [V,W]^k = Σ_j V^j ∂_j W^k − W^j ∂_j V^k.
inline PolyField lie_bracket(const PolyField& v, const PolyField& w) {
  const std::size_t n = v.size();
  if (w.size() != n) throw DimensionMismatch("vector fields of different dimension");
  PolyField r(n, MultiPoly(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j].is_zero() && w[j].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (!v[j].is_zero()) r[k] += v[j] * w[k].derivative(j);
      if (!w[j].is_zero()) r[k] -= w[j] * v[k].derivative(j);
    }
  }
  return r;
}

inline Vector evaluate(const PolyField& f, const Vector& point) {
  Vector r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(c.evaluate(point));
  return r;
}

}  // namespace g2roll
