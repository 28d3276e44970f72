#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2roll/error.hpp"
#include "g2roll/exact/matrix.hpp"
#include "g2roll/g2.hpp"

namespace g2roll {

// ---------------------------------------------------------------------------
// Characteristic polynomials and rational eigenvalues.

/// Coefficients c_0..c_n of det(λI − M), by Faddeev–LeVerrier.
inline Vector characteristic_polynomial(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  Vector c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return c;
}

inline Rational evaluate_polynomial(const Vector& c, const Rational& x) {
  Rational s;
  for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
  return s;
}

namespace detail {
inline std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}
}  // namespace detail

/// Rational roots with multiplicity, for a polynomial given by its coefficients (low to high).
inline std::vector<Rational> rational_roots(Vector c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  while (c.front().is_zero()) {
    roots.push_back(Rational(0));
    c.erase(c.begin());
  }
  // clear denominators
  mpz_class l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& x : c) ic.push_back((x * Rational(mpq_class(l))).numerator());
  std::vector<Rational> candidates;
  for (const auto& p : detail::divisors(ic.front()))
    for (const auto& q : detail::divisors(ic.back())) {
      candidates.push_back(Rational(mpq_class(p, q)));
      candidates.push_back(-Rational(mpq_class(p, q)));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    // deflate repeatedly
    for (;;) {
      if (c.size() <= 1 || !evaluate_polynomial(c, r).is_zero()) break;
      Vector q(c.size() - 1);
      Rational carry;
      for (std::size_t k = c.size() - 1; k-- > 0;) {
        carry = c[k + 1] + carry * r;
        q[k] = carry;
      }
      c = std::move(q);
      roots.push_back(r);
    }
  }
  return roots;
}

// ---------------------------------------------------------------------------

/// Values of a functional on the Cartan generators H₁, H₂, H₃ with H_i = ρ(3E_ii − I).
/// H₁ + H₂ + H₃ = 0, so the first two entries determine it.
struct Functional {
  std::array<Rational, 3> v{};

  /// t_i, the functional ρ(diag(a)) ↦ a_i.
  static Functional t(int i) {
    Functional f;
    for (int j = 0; j < 3; ++j) f.v[j] = (i == j) ? 2 : -1;
    return f;
  }
  bool is_zero() const { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }
  std::string str() const { return "(" + v[0].str() + "," + v[1].str() + "," + v[2].str() + ")"; }

  friend Functional operator+(const Functional& a, const Functional& b) {
    return {{a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]}};
  }
  friend Functional operator-(const Functional& a) { return {{-a.v[0], -a.v[1], -a.v[2]}}; }
  friend Functional operator-(const Functional& a, const Functional& b) { return a + (-b); }
  friend bool operator==(const Functional&, const Functional&) = default;
  friend auto operator<=>(const Functional& a, const Functional& b) { return a.v <=> b.v; }
};

inline G2Element cartan_generator(int i) {
  Mat3 a = Rational(3) * Mat3::unit(i, i) - Mat3::identity();
  return g2_from_A(a);
}

/// The scaling direction X used for weights: ρ(3E_ii − I) = −3X_ii.
inline std::vector<G2Element> cartan_generators() { return {cartan_generator(0), cartan_generator(1), cartan_generator(2)}; }

struct Root {
  Functional value;
  std::string label;  // e.g. "sigma1", "-lambda2"
  bool is_long = false;
  G2Element vector;   // spans the root space
};

struct RootDatum {
  std::vector<G2Element> cartan_basis;  // H₁, H₂
  std::vector<Root> roots;              // 12

  const Root& by_label(const std::string& label) const {
    for (const auto& r : roots)
      if (r.label == label) return r;
    throw DecompositionFailure("no root labelled " + label);
  }
  std::optional<Root> by_value(const Functional& f) const {
    for (const auto& r : roots)
      if (r.value == f) return r;
    return std::nullopt;
  }
};

/// Root labels in terms of t₁, t₂, t₃ (t₁ + t₂ + t₃ = 0):
/// σ₁ = t₃, σ₂ = −t₂, σ₃ = −t₁, λ₁ = t₁ − t₂, λ₂ = t₃ − t₁, λ₃ = t₃ − t₂.
inline std::vector<std::pair<std::string, Functional>> root_labels() {
  using F = Functional;
  std::vector<std::pair<std::string, Functional>> pos = {
      {"sigma1", F::t(2)},           {"sigma2", -F::t(1)},          {"sigma3", -F::t(0)},
      {"lambda1", F::t(0) - F::t(1)}, {"lambda2", F::t(2) - F::t(0)}, {"lambda3", F::t(2) - F::t(1)}};
  std::vector<std::pair<std::string, Functional>> all = pos;
  for (const auto& [name, f] : pos) all.push_back({"-" + name, -f});
  return all;
}

/// Evaluates α on each of H₁, H₂, H₃ given [H_i, E] = α(H_i) E.
inline Functional eigen_functional(const G2Element& e) {
  Functional f;
  for (int i = 0; i < 3; ++i) {
    auto lambda = proportionality(bracket(cartan_generator(i), e).to_vector(), e.to_vector());
    if (!lambda) throw DecompositionFailure("not a simultaneous eigenvector: " + to_string(e.to_vector()));
    f.v[i] = *lambda;
  }
  return f;
}

/// Simultaneous eigen-decomposition of g₂ under the diagonal Cartan.
inline RootDatum root_decomposition() {
  const auto basis = g2_basis();
  // regular element: distinct eigenvalues on all twelve root spaces
  const G2Element regular = g2_from_A(Mat3::diag(1, 3, -4));
  Matrix ad = ad_matrix(regular, basis);
  auto eigenvalues = rational_roots(characteristic_polynomial(ad));
  if (eigenvalues.size() != 14) throw DecompositionFailure("characteristic polynomial has irrational roots");

  RootDatum datum;
  datum.cartan_basis = {cartan_generator(0), cartan_generator(1)};
  auto labels = root_labels();

  std::map<Rational, int> multiplicity;
  for (const auto& e : eigenvalues) ++multiplicity[e];
  for (const auto& [mu, mult] : multiplicity) {
    Matrix shifted = ad;
    for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= mu;
    auto ker = kernel_basis(shifted);
    if (ker.size() != static_cast<std::size_t>(mult))
      throw DecompositionFailure("eigenvalue " + mu.str() + " is not semisimple");
    if (mu.is_zero()) {
      if (mult != 2) throw DecompositionFailure("Cartan subalgebra is not 2-dimensional");
      continue;
    }
    if (mult != 1) throw DecompositionFailure("root space of dimension " + std::to_string(mult));
    G2Element v;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!ker[0][k].is_zero()) v = v + ker[0][k] * basis[k];
    // canonical scale: first nonzero coordinate equals 1
    Vector coords = v.to_vector();
    for (const auto& x : coords)
      if (!x.is_zero()) {
        v = (Rational(1) / x) * v;
        break;
      }
    Root r;
    r.value = eigen_functional(v);
    r.vector = v;
    for (const auto& [name, f] : labels)
      if (f == r.value) r.label = name;
    if (r.label.empty()) throw DecompositionFailure("unlabelled root " + r.value.str());
    r.is_long = r.label.find("lambda") != std::string::npos;
    datum.roots.push_back(std::move(r));
  }
  if (datum.roots.size() != 12) throw DecompositionFailure("expected 12 roots");
  std::sort(datum.roots.begin(), datum.roots.end(), [&labels](const Root& a, const Root& b) {
    auto pos = [&labels](const std::string& l) {
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i].first == l) return i;
      return labels.size();
    };
    return pos(a.label) < pos(b.label);
  });
  return datum;
}

// ---------------------------------------------------------------------------
// Killing form geometry on roots.

inline Rational killing_form(const G2Element& u, const G2Element& v) {
  const auto basis = g2_basis();
  return -(ad_matrix(u, basis) * ad_matrix(v, basis)).trace();
}

/// Inner product of functionals dual to tr(ad X ad Y) on span{H₁,H₂}, where it is positive definite.
inline Rational root_inner_product(const Functional& a, const Functional& b) {
  static const Matrix kinv = [] {
    const G2Element h1 = cartan_generator(0), h2 = cartan_generator(1);
    Matrix k(2, 2);
    k(0, 0) = -killing_form(h1, h1);
    k(0, 1) = k(1, 0) = -killing_form(h1, h2);
    k(1, 1) = -killing_form(h2, h2);
    return k.inverse();
  }();
  Vector av{a.v[0], a.v[1]}, bv{b.v[0], b.v[1]};
  return dot(av, kinv * bv);
}

// ---------------------------------------------------------------------------
// Homogeneous distribution data (G, H, W) with a computable bracket.

struct DistributionData {
  std::string name;
  std::size_t algebra_dim = 0;
  std::vector<Vector> isotropy;  // basis of 𝔥
  std::vector<Vector> plane;     // two vectors spanning W mod 𝔥
  std::function<Vector(const Vector&, const Vector&)> bracket;
};

inline DistributionData g2_distribution_data(const std::vector<G2Element>& isotropy, const std::vector<G2Element>& plane,
                                             std::string name = "g2") {
  DistributionData d;
  d.name = std::move(name);
  d.algebra_dim = 14;
  d.isotropy = to_vectors(isotropy);
  d.plane = to_vectors(plane);
  d.bracket = [](const Vector& a, const Vector& b) {
    return bracket(G2Element::from_vector(a), G2Element::from_vector(b)).to_vector();
  };
  return d;
}

/// [𝔥, W] ⊆ W + 𝔥
inline bool plane_is_invariant(const DistributionData& d) {
  std::vector<Vector> wh = d.plane;
  wh.insert(wh.end(), d.isotropy.begin(), d.isotropy.end());
  for (const auto& h : d.isotropy)
    for (const auto& w : d.plane)
      if (!in_span(wh, d.bracket(h, w))) return false;
  return true;
}

/// Dimensions of W, W + [W,W], W + [W,W] + [W,[W,W]] modulo the isotropy.
inline std::vector<std::size_t> derived_flag(const DistributionData& d, std::size_t steps = 3) {
  const std::size_t hdim = span_rank(d.isotropy);
  std::vector<Vector> f1 = d.isotropy;
  f1.insert(f1.end(), d.plane.begin(), d.plane.end());
  f1 = span_basis(f1);
  std::vector<Vector> fk = f1;
  std::vector<std::size_t> dims{span_rank(fk) - hdim};
  for (std::size_t s = 1; s < steps; ++s) {
    std::vector<Vector> next = fk;
    for (const auto& a : f1)
      for (const auto& b : fk) next.push_back(d.bracket(a, b));
    fk = span_basis(next);
    dims.push_back(fk.size() - hdim);
  }
  return dims;
}

// ---------------------------------------------------------------------------

/// Labels of the roots whose spaces, together with the Cartan, form the parabolic 𝔭.
inline std::vector<std::string> parabolic_root_labels() {
  return {"-sigma1", "sigma2", "-sigma3", "lambda1", "-lambda2", "lambda3", "-lambda3"};
}

/// Labels of the two root spaces spanning W.
inline std::vector<std::string> plane_root_labels() { return {"sigma1", "-sigma2"}; }

inline std::vector<G2Element> build_parabolic(const RootDatum& rd) {
  std::vector<G2Element> p = rd.cartan_basis;
  for (const auto& l : parabolic_root_labels()) p.push_back(rd.by_label(l).vector);
  const auto pv = to_vectors(p);
  for (const auto& a : p)
    for (const auto& b : p)
      if (!in_span(pv, bracket(a, b).to_vector())) throw NotClosed("parabolic subalgebra");
  return p;
}

inline std::vector<G2Element> plane_vectors(const RootDatum& rd) {
  std::vector<G2Element> w;
  for (const auto& l : plane_root_labels()) w.push_back(rd.by_label(l).vector);
  return w;
}

inline DistributionData parabolic_distribution_data(const RootDatum& rd) {
  return g2_distribution_data(build_parabolic(rd), plane_vectors(rd), "g2/p");
}

// ---------------------------------------------------------------------------
// Weights of V.

struct WeightDatum {
  std::vector<std::string> names;           // e1..e3, f1..f3, U
  std::vector<Functional> weights;          // same order
  std::vector<CartanPoint> weight_vectors;  // Cartan coordinates
};

/// Weight of a Cartan-coordinate vector, if it is a simultaneous eigenvector.
inline std::optional<Functional> weight_of(const CartanPoint& p) {
  Functional f;
  for (int i = 0; i < 3; ++i) {
    auto lambda = proportionality(rho(cartan_generator(i)) * p.to_vector(), p.to_vector());
    if (!lambda) return std::nullopt;
    f.v[i] = *lambda;
  }
  return f;
}

inline CartanPoint weight_vector_e(int i) {
  CartanPoint p;
  p.x[i] = -1;  // e_i = −E_i
  return p;
}
inline CartanPoint weight_vector_f(int i) {
  CartanPoint p;
  p.y[i] = 1;
  return p;
}
inline CartanPoint weight_vector_U() {
  CartanPoint p;
  p.z = 1;
  return p;
}

inline WeightDatum weight_decomposition() {
  WeightDatum wd;
  for (int n = 0; n < 7; ++n) {
    CartanPoint p = n < 3 ? weight_vector_e(n) : n < 6 ? weight_vector_f(n - 3) : weight_vector_U();
    auto w = weight_of(p);
    if (!w) throw DecompositionFailure(std::string(kBasisNames[n]) + " is not a weight vector");
    wd.names.push_back(kBasisNames[n]);
    wd.weights.push_back(*w);
    wd.weight_vectors.push_back(p);
  }
  return wd;
}

/// Checks 𝔤_α V_w ⊆ V_{w+α} for every root and weight (zero when w+α is not a weight).
inline bool weight_shift_rule_holds(const RootDatum& rd, const WeightDatum& wd) {
  for (const auto& r : rd.roots) {
    Matrix m = rho(r.vector);
    for (std::size_t k = 0; k < wd.weights.size(); ++k) {
      Vector image = m * wd.weight_vectors[k].to_vector();
      Functional target = wd.weights[k] + r.value;
      std::vector<Vector> target_space;
      for (std::size_t l = 0; l < wd.weights.size(); ++l)
        if (wd.weights[l] == target) target_space.push_back(wd.weight_vectors[l].to_vector());
      if (!in_span(target_space, image)) return false;
    }
  }
  return true;
}

}  // namespace g2roll
