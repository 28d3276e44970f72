#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "g2roll/compact.hpp"
#include "g2roll/g2.hpp"
#include "g2roll/octonion.hpp"
#include "g2roll/pfaffian.hpp"
#include "g2roll/quadric.hpp"
#include "g2roll/report.hpp"
#include "g2roll/rolling.hpp"
#include "g2roll/roots.hpp"
#include "g2roll/serre.hpp"

namespace g2roll {

struct CheckOptions {
  std::uint64_t seed = 0;
  int samples = 20;
};

namespace detail {

inline int at_least(const CheckOptions& o, int n) { return std::max(n, o.samples); }

inline Rng group_rng(const CheckOptions& o, std::uint64_t tag) { return Rng(o.seed * 0x9E3779B97F4A7C15ULL + tag); }

/// Runs one claim body; exceptions become failures under the same id.
inline void guard(Report& r, const std::string& id, const std::string& locus, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.error(id, locus, e);
  }
}

inline SplitOctonion random_octonion(Rng& rng) {
  Vector v = rng.vector(8);
  return {{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]}};
}

inline SplitOctonion random_imaginary(Rng& rng) { return from_chart_a(rng.vector(7)); }

inline json functional_json(const Functional& f) { return json::array({f.v[0].str(), f.v[1].str(), f.v[2].str()}); }

inline json dims_json(const std::vector<std::size_t>& d) { return to_json(d); }

/// A random root vector scaled by a nonzero rational, exponentiated.
inline Matrix random_group_element(const RootDatum& rd, Rng& rng) {
  const auto& root = rd.roots[static_cast<std::size_t>(rng.integer(0, 11))];
  Matrix g = exp_nilpotent(rng.nonzero_rational(3, 2) * root.vector);
  const auto& other = rd.roots[static_cast<std::size_t>(rng.integer(0, 11))];
  return g * exp_nilpotent(rng.nonzero_rational(3, 2) * other.vector);
}

inline RollingState random_state(Rng& rng, const Rational& ratio) {
  Mat3 g = sample_so3(rng);
  Vec3 x = sample_s2_off_poles(rng);
  return {g, x, ratio};
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Report check_exact_core(const CheckOptions& o) {
  using namespace detail;
  Report r;
  Rng rng = group_rng(o, 1);
  const std::string L = "exact arithmetic and samplers";

  guard(r, "core.kernel.rank_nullity", L, [&] {
    bool ok = kernel_basis(Matrix::identity(3)).empty() && kernel_basis(Matrix::from_rows({{1, 1, 1}})).size() == 2;
    int n = at_least(o, 10);
    for (int t = 0; t < n; ++t) {
      std::vector<Vector> rows;
      for (int i = 0; i < 4; ++i) rows.push_back(rng.vector(6, 2, 2));
      Matrix m = Matrix::from_rows(rows);
      auto ker = kernel_basis(m);
      if (m.rank() + ker.size() != 6) ok = false;
      for (const auto& k : ker)
        if (!is_zero(m * k)) ok = false;
    }
    r.check("core.kernel.rank_nullity", L, ok, {{"samples", n}});
  });

  guard(r, "core.sample_so3", L, [&] {
    bool ok = cayley(Vec3{}) == Mat3::identity();
    int n = at_least(o, 20);
    for (int seed = 0; seed < n; ++seed) {
      Mat3 g = sample_so3(static_cast<std::uint64_t>(seed) + o.seed);
      if (g.transpose() * g != Mat3::identity() || g.det() != 1) ok = false;
    }
    r.check("core.sample_so3", L, ok, {{"samples", n}, {"seed1", to_json(sample_so3(1).to_vector())}});
  });

  guard(r, "core.unit_quaternion", L, [&] {
    bool ok = sample_unit_quaternion(Vec3{}) == Quaternion::real(1) &&
              sample_unit_quaternion(Vec3::unit(0)) == Quaternion::unit(1) &&
              sample_unit_quaternion(Vec3{Rational(1, 2), 0, 0}) == Quaternion{Rational(3, 5), Rational(4, 5), 0, 0};
    int n = at_least(o, 20);
    for (int t = 0; t < n; ++t)
      if (sample_unit_quaternion(rng).norm2() != 1) ok = false;
    r.check("core.unit_quaternion", L, ok, {{"w=(1/2,0,0)", to_json(sample_unit_quaternion(Vec3{Rational(1, 2), 0, 0}).to_vector())}});
  });

  guard(r, "core.rational.reduced", L, [&] {
    Rational q(6, -4);
    r.check("core.rational.reduced", L, q.str() == "-3/2" && q.denominator() > 0, {{"6/-4", q.str()}});
  });
  return r;
}

// ---------------------------------------------------------------------------

inline Report check_octonions(const CheckOptions& o) {
  using namespace detail;
  Report r;
  Rng rng = group_rng(o, 2);
  const std::string T = "split octonion multiplication table";
  const std::string P = "split octonion product and conjugation";
  const std::string F = "inner product on imaginary split octonions";
  const std::string C = "Cartan coordinates on V";

  guard(r, "octonion.table", T, [&] {
    auto t = basis_multiplication_table();
    r.check("octonion.table", T, t == expected_multiplication_table(), {{"entries", 49}});
  });

  guard(r, "octonion.examples", T, [&] {
    auto e = [](int i) { return basis_e(i); };
    auto f = [](int i) { return basis_f(i); };
    SplitOctonion x = random_octonion(rng);
    bool ok = basis_U() * basis_U() == SplitOctonion::one() && e(0) * e(1) == f(2) && e(1) * e(0) == -f(2) &&
              f(0) * f(1) == e(2) && (e(0) * e(0)).is_zero() && SplitOctonion::one() * x == x && x * SplitOctonion::one() == x;
    r.check("octonion.examples", T, ok, {{"e1e2", table_entry(e(0) * e(1)).str()}, {"f1f2", table_entry(f(0) * f(1)).str()}});
  });

  const int pairs = at_least(o, 100);
  std::vector<std::pair<SplitOctonion, SplitOctonion>> sample;
  for (int t = 0; t < pairs; ++t) {
    SplitOctonion x = random_octonion(rng);
    SplitOctonion y = random_octonion(rng);
    sample.push_back({x, y});
  }

  guard(r, "octonion.alternative", P, [&] {
    bool ok = true;
    for (const auto& [x, y] : sample)
      if (x * (x * y) != (x * x) * y || (y * x) * x != y * (x * x)) ok = false;
    r.check("octonion.alternative", P, ok, {{"pairs", pairs}});
  });

  guard(r, "octonion.associativity_fails", P, [&] {
    bool found = false;
    for (std::size_t k = 0; k + 1 < sample.size() && !found; ++k) {
      const auto& [x, y] = sample[k];
      const auto& z = sample[k + 1].first;
      if ((x * y) * z != x * (y * z)) found = true;
    }
    r.check("octonion.associativity_fails", P, found);
  });

  guard(r, "octonion.composition", P, [&] {
    bool ok = true;
    auto N = [](const SplitOctonion& x) { return x * x.conj(); };
    for (const auto& [x, y] : sample) {
      SplitOctonion nx = N(x);
      if (!nx.is_imaginary() && !(nx - SplitOctonion::real(nx.re())).is_zero()) ok = false;
      if (N(x * y) != SplitOctonion::real(N(x).re() * N(y).re())) ok = false;
    }
    r.check("octonion.composition", P, ok, {{"pairs", pairs}});
  });

  guard(r, "octonion.norm_sign", F, [&] {
    bool plus = true, printed = true;
    for (const auto& [x, y] : sample) {
      SplitOctonion n = x * x.conj();
      if (n != SplitOctonion::real(inner_product(x, x))) plus = false;
      if (n != SplitOctonion::real(-inner_product(x, x))) printed = false;
    }
    r.flag("octonion.norm_sign", F, plus && !printed, "x xbar = +<x,x> 1; printed with a minus sign",
           {{"x xbar = <x,x>", plus}, {"x xbar = -<x,x>", printed}});
  });

  guard(r, "octonion.square_sign", F, [&] {
    bool minus = true, printed = true;
    for (const auto& [x, y] : sample) {
      SplitOctonion v = from_chart_a(to_chart_a(x).first);
      if (v * v != SplitOctonion::real(-inner_product(v, v))) minus = false;
      if (v * v != SplitOctonion::real(inner_product(v, v))) printed = false;
    }
    r.flag("octonion.square_sign", F, minus && !printed, "x in V gives x^2 = -<x,x> 1; printed as +<x,x> 1",
           {{"x^2 = -<x,x>", minus}, {"x^2 = <x,x>", printed}});
  });

  guard(r, "octonion.quadratic_form_sign", F, [&] {
    bool ok = true, printed = true;
    for (const auto& [x, y] : sample) {
      SplitOctonion v = from_chart_a(to_chart_a(x).first);
      Rational vv = v.a.norm2(), qq = v.b.norm2();
      if (inner_product(v, v) != vv - qq) ok = false;
      if (inner_product(v, v) != qq - vv) printed = false;
    }
    r.flag("octonion.quadratic_form_sign", F, ok && !printed, "<(v,q),(v,q)> = |v|^2 - |q|^2; printed as -|v|^2 + |q|^2");
  });

  guard(r, "octonion.conjugate_of_product", P, [&] {
    bool reversed = true, printed = true;
    for (const auto& [x, y] : sample) {
      if ((x * y).conj() != y.conj() * x.conj()) reversed = false;
      if ((x * y).conj() != x.conj() * y.conj()) printed = false;
    }
    r.flag("octonion.conjugate_of_product", P, reversed && !printed,
           "conj(xy) = conj(y) conj(x); printed as conj(x) conj(y)",
           {{"conj(y)conj(x)", reversed}, {"conj(x)conj(y)", printed}});
  });

  guard(r, "octonion.signature", F, [&] {
    Inertia in = inertia(inner_product_gram_chart_a());
    bool ok = in.zero == 0 && ((in.positive == 3 && in.negative == 4) || (in.positive == 4 && in.negative == 3));
    r.check("octonion.signature", F, ok, {{"positive", in.positive}, {"negative", in.negative}});
  });

  guard(r, "octonion.null_basis", F, [&] {
    bool ok = inner_product(basis_U(), basis_U()) == -1 && !inner_product(basis_e(0), basis_f(0)).is_zero();
    for (int i = 0; i < 3; ++i)
      if (!inner_product(basis_e(i), basis_e(i)).is_zero() || !inner_product(basis_f(i), basis_f(i)).is_zero()) ok = false;
    r.check("octonion.null_basis", F, ok,
            {{"<U,U>", inner_product(basis_U(), basis_U()).str()}, {"<e1,f1>", inner_product(basis_e(0), basis_f(0)).str()}});
  });

  guard(r, "octonion.chart_roundtrip", C, [&] {
    bool ok = true;
    for (int t = 0; t < pairs; ++t) {
      Vector a = rng.vector(7);
      if (chart_b_to_a(chart_a_to_b(a)) != a || to_chart_a(from_chart_a(a)).first != a) ok = false;
    }
    r.check("octonion.chart_roundtrip", C, ok, {{"samples", pairs}});
  });

  guard(r, "octonion.J_sign", C, [&] {
    bool ok = J(CartanPoint::from({1, 0, 0, 0, 0, 0, 0})).is_zero() && J(CartanPoint::from({1, 0, 0, 1, 0, 0, 0})) == 1;
    for (int t = 0; t < pairs; ++t) {
      Vector p = rng.vector(7);
      if (J(CartanPoint::from(p)) != -inner_product(to_octonion(CartanPoint::from(p)), to_octonion(CartanPoint::from(p))))
        ok = false;
    }
    r.check("octonion.J_sign", C, ok, {{"J", "-<p,p>"}});
  });

  guard(r, "octonion.cartan_product", C, [&] {
    bool ok = true, square = true;
    for (int t = 0; t < pairs; ++t) {
      CartanPoint p = CartanPoint::from(rng.vector(7)), q = CartanPoint::from(rng.vector(7));
      auto [im, re] = cartan_coordinate_product(p, q);
      auto [im2, re2] = to_cartan(to_octonion(p) * to_octonion(q));
      if (im.to_vector() != im2.to_vector() || re != re2) ok = false;
      auto [sq, sre] = cartan_coordinate_product(p, p);
      if (!sq.is_zero() || sre != J(p)) square = false;
    }
    r.check("octonion.cartan_product", C, ok && square, {{"pairs", pairs}, {"p^2 = J", square}});
  });

  guard(r, "octonion.cartan_product_printed", C, [&] {
    bool z_printed = true, re_printed = true, first_two = true;
    for (int t = 0; t < pairs; ++t) {
      CartanPoint p = CartanPoint::from(rng.vector(7)), q = CartanPoint::from(rng.vector(7));
      auto [im, re] = to_cartan(to_octonion(p) * to_octonion(q));
      Vec3 x1 = Rational(-1) * cross(p.y, q.y) - p.z * q.x + q.z * p.x;
      Vec3 y1 = cross(p.x, q.x) + p.z * q.y - q.z * p.y;
      if (im.x != x1 || im.y != y1) first_two = false;
      if (im.z != Rational(1, 2) * (dot(p.x, q.y) - dot(q.x, p.y))) z_printed = false;
      if (re != p.z * q.z + Rational(1, 2) * (dot(p.x, q.y) - dot(q.x, p.y))) re_printed = false;
    }
    r.flag("octonion.cartan_product_printed", C, first_two && !z_printed && !re_printed,
           "z-component is 1/2(x'.y - x.y') and the real part is zz' + 1/2(x.y' + x'.y); both printed with the "
           "opposite sign on one term",
           {{"x,y components as printed", first_two}, {"z as printed", z_printed}, {"real part as printed", re_printed}});
  });
  return r;
}

// ---------------------------------------------------------------------------

inline Report check_g2(const CheckOptions& o, const RootDatum& rd) {
  using namespace detail;
  Report r;
  Rng rng = group_rng(o, 3);
  const std::string L = "matrix realization of g2";
  auto random_element = [&rng] {
    Mat3 a = rng.traceless(3, 2);
    Vec3 b = rng.vec3(3, 2);
    Vec3 c = rng.vec3(3, 2);
    return G2Element{a, b, c};
  };

  guard(r, "g2.dimension", L, [&] {
    std::vector<Vector> mats;
    for (const auto& u : g2_basis()) mats.push_back(rho(u).flat());
    bool traceless = true;
    for (const auto& u : g2_basis())
      if (!rho(u).trace().is_zero()) traceless = false;
    bool rejects = false;
    try {
      rho(Mat3::identity(), {}, {});
    } catch (const NonTraceless&) {
      rejects = true;
    }
    r.check("g2.dimension", L, span_rank(mats) == 14 && traceless && rejects && rho(G2Element{}).is_zero(),
            {{"rank", span_rank(mats)}});
  });

  guard(r, "g2.cartan_operators", L, [&] {
    auto ops = cartan_operators();
    std::vector<Vector> cols;
    for (const auto& op : ops) cols.push_back(op.matrix.flat());
    auto rel = kernel_basis(Matrix::from_columns(cols, 49));
    Vector expected = zero_vector(15);
    for (int i = 0; i < 3; ++i) expected[i] = 1;
    bool unique = rel.size() == 1 && proportionality(rel[0], expected).has_value();
    bool in_image = true;
    for (const auto& op : ops)
      if (!from_matrix(op.matrix)) in_image = false;
    r.check("g2.cartan_operators", L, span_rank(cols) == 14 && unique && in_image,
            {{"operators", ops.size()}, {"rank", span_rank(cols)}, {"relation", "X11 + X22 + X33 = 0"}});
  });

  guard(r, "g2.rho_expansion", L, [&] {
    bool ok = true;
    for (int t = 0; t < at_least(o, 20); ++t) {
      G2Element u = random_element();
      if (rho(u) != cartan_expansion(u)) ok = false;
    }
    r.check("g2.rho_expansion", L, ok, {{"identity", "rho(A,b,c) = -sum a_ij X_ij + sum b_i X_i0 + sum c_i X_0i"}});
  });

  guard(r, "g2.bracket_closed_form", L, [&] {
    bool ok = true;
    int n = at_least(o, 10);
    for (int t = 0; t < n; ++t) {
      G2Element u = random_element(), v = random_element();
      if (rho(bracket(u, v)) != commutator(rho(u), rho(v))) ok = false;
      checked_bracket(u, v);
      if (!bracket(u, u).is_zero()) ok = false;
      Vec3 b2 = u.A * v.b - v.A * u.b - Rational(2) * cross(u.c, v.c);
      if (bracket(u, v).b != b2) ok = false;
    }
    r.check("g2.bracket_closed_form", L, ok, {{"pairs", n}});
  });

  guard(r, "g2.jacobi", L, [&] {
    bool ok = true;
    int n = at_least(o, 50);
    for (int t = 0; t < n; ++t) {
      G2Element a = random_element(), b = random_element(), c = random_element();
      if (!(bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero()) ok = false;
    }
    r.check("g2.jacobi", L, ok, {{"triples", n}});
  });

  guard(r, "g2.J_antisymmetric", L, [&] {
    bool all = true;
    for (const auto& u : g2_basis())
      if (!is_J_antisymmetric(rho(u))) all = false;
    // dimension of all J-antisymmetric 7×7 matrices: kernel of M ↦ MᵗG + GM
    Matrix g = j_gram();
    std::vector<Vector> cols;
    for (int k = 0; k < 49; ++k) {
      Matrix e(7, 7);
      e(static_cast<std::size_t>(k / 7), static_cast<std::size_t>(k % 7)) = 1;
      cols.push_back((e.transpose() * g + g * e).flat());
    }
    std::size_t dim = kernel_basis(Matrix::from_columns(cols, 49)).size();
    r.check("g2.J_antisymmetric", L, all && dim == 21 && !is_J_antisymmetric(Matrix::identity(7)),
            {{"J-antisymmetric dim", dim}, {"g2 dim", 14}, {"codimension", dim - 14}});
  });

  guard(r, "g2.exp_automorphism", L, [&] {
    bool ok = rho(G2Element{}).is_zero() && exp_nilpotent(G2Element{}) == Matrix::identity(7);
    bool rejects = false;
    try {
      exp_nilpotent(cartan_generator(0));
    } catch (const NotNilpotent&) {
      rejects = true;
    }
    int n = at_least(o, 20);
    for (int t = 0; t < n; ++t) {
      Matrix g = random_group_element(rd, rng);
      CartanPoint p = CartanPoint::from(rng.vector(7)), q = CartanPoint::from(rng.vector(7));
      CartanPoint gp = apply(g, p), gq = apply(g, q);
      if (J(gp) != J(p)) ok = false;
      auto [im, re] = cartan_coordinate_product(p, q);
      auto [im2, re2] = cartan_coordinate_product(gp, gq);
      if (im2.to_vector() != g * im.to_vector() || re2 != re) ok = false;
    }
    Matrix g1 = exp_nilpotent(g2_from_b(Vec3::unit(0)));
    CartanPoint p = CartanPoint::from(rng.vector(7));
    if (J(apply(g1, p)) != J(p)) ok = false;
    r.check("g2.exp_automorphism", L, ok && rejects, {{"samples", n}});
  });
  return r;
}

// ---------------------------------------------------------------------------

inline Report check_roots(const CheckOptions& o, const RootDatum& rd) {
  using namespace detail;
  (void)o;
  Report r;
  const std::string L = "root decomposition of g2";
  const std::string W = "weights of V";

  guard(r, "roots.decomposition", L, [&] {
    std::size_t longs = 0;
    bool eigen = true;
    json labels = json::object();
    for (const auto& root : rd.roots) {
      longs += root.is_long;
      for (int i = 0; i < 3; ++i)
        if (bracket(cartan_generator(i), root.vector) != root.value.v[i] * root.vector) eigen = false;
      labels[root.label] = functional_json(root.value);
    }
    r.check("roots.decomposition", L, rd.roots.size() == 12 && longs == 6 && rd.cartan_basis.size() == 2 && eigen,
            {{"roots", rd.roots.size()}, {"long", longs}, {"cartan", rd.cartan_basis.size()}, {"labels", labels}});
  });

  guard(r, "roots.short_long_placement", L, [&] {
    bool ok = true;
    for (const auto& root : rd.roots) {
      const auto& u = root.vector;
      bool offdiag = u.b.is_zero() && u.c.is_zero();
      bool bc = u.A.is_zero() && (u.b.is_zero() != u.c.is_zero());
      if (root.is_long ? !offdiag : !bc) ok = false;
    }
    r.check("roots.short_long_placement", L, ok, {{"short", "b or c directions"}, {"long", "off-diagonal A"}});
  });

  guard(r, "roots.sl3", L, [&] {
    std::vector<Vector> sl3 = to_vectors(rd.cartan_basis);
    for (const auto& root : rd.roots)
      if (root.is_long) sl3.push_back(root.vector.to_vector());
    bool closed = true;
    for (const auto& a : sl3)
      for (const auto& b : sl3)
        if (!in_span(sl3, bracket(G2Element::from_vector(a), G2Element::from_vector(b)).to_vector())) closed = false;
    r.check("roots.sl3", L, closed && span_rank(sl3) == 8, {{"dim", span_rank(sl3)}});
  });

  guard(r, "roots.non_root_sums", L, [&] {
    bool ok = true;
    std::size_t pairs = 0;
    for (const auto& a : rd.roots)
      for (const auto& b : rd.roots) {
        Functional s = a.value + b.value;
        if (s.is_zero() || rd.by_value(s)) continue;
        ++pairs;
        if (!bracket(a.vector, b.vector).is_zero()) ok = false;
      }
    r.check("roots.non_root_sums", L, ok, {{"pairs", pairs}});
  });

  guard(r, "roots.metric", L, [&] {
    Rational s = root_inner_product(rd.by_label("sigma1").value, rd.by_label("sigma1").value);
    Rational l = root_inner_product(rd.by_label("lambda1").value, rd.by_label("lambda1").value);
    bool ok = s.sign() > 0 && l == Rational(3) * s;
    static const std::vector<Rational> allowed = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
    for (const auto& a : rd.roots)
      for (const auto& b : rd.roots) {
        Rational ab = root_inner_product(a.value, b.value);
        Rational c2 = ab * ab / (root_inner_product(a.value, a.value) * root_inner_product(b.value, b.value));
        if (std::find(allowed.begin(), allowed.end(), c2) == allowed.end()) ok = false;
      }
    r.check("roots.metric", L, ok, {{"short norm", s.str()}, {"long norm", l.str()}, {"ratio", (l / s).str()}});
  });

  guard(r, "roots.parabolic", L, [&] {
    auto p = build_parabolic(rd);
    auto d = parabolic_distribution_data(rd);
    r.check("roots.parabolic", L, span_rank(to_vectors(p)) == 9 && plane_is_invariant(d),
            {{"dim p", 9}, {"dim g2/p", 5}, {"roots", to_json(parabolic_root_labels())}, {"W", to_json(plane_root_labels())}});
  });

  guard(r, "roots.derived_flag", L, [&] {
    auto dims = derived_flag(parabolic_distribution_data(rd));
    r.check("roots.derived_flag", L, dims == std::vector<std::size_t>{2, 3, 5}, {{"flag", dims_json(dims)}});
  });

  guard(r, "roots.derived_flag_abelian", L, [&] {
    auto d = so3so3_data({}, {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}}, "abelian");
    auto dims = derived_flag(d);
    r.check("roots.derived_flag_abelian", L, dims == std::vector<std::size_t>{2, 2, 2}, {{"flag", dims_json(dims)}});
  });

  guard(r, "roots.weights", W, [&] {
    auto wd = weight_decomposition();
    bool ok = true;
    json table = json::object();
    for (std::size_t k = 0; k < wd.names.size(); ++k) {
      Functional want = k < 3 ? Functional::t(static_cast<int>(k)) : k < 6 ? -Functional::t(static_cast<int>(k - 3)) : Functional{};
      if (wd.weights[k] != want) ok = false;
      table[wd.names[k]] = functional_json(wd.weights[k]);
    }
    r.check("roots.weights", W, ok, {{"weights", table}});
  });

  guard(r, "roots.weight_shift", W, [&] {
    r.check("roots.weight_shift", W, weight_shift_rule_holds(rd, weight_decomposition()));
  });

  guard(r, "roots.weight_vectors_null", W, [&] {
    auto wd = weight_decomposition();
    bool ok = true;
    for (std::size_t k = 0; k < 6; ++k)
      if (!J(wd.weight_vectors[k]).is_zero()) ok = false;
    Matrix t = torus_element(2, Rational(1, 3));
    Rational ts[3] = {2, Rational(1, 3), Rational(3, 2)};
    for (int i = 0; i < 3; ++i) {
      if (apply(t, weight_vector_e(i)).to_vector() != ts[i] * weight_vector_e(i).to_vector()) ok = false;
      if (apply(t, weight_vector_f(i)).to_vector() != (Rational(1) / ts[i]) * weight_vector_f(i).to_vector()) ok = false;
    }
    if (apply(t, weight_vector_U()).to_vector() != weight_vector_U().to_vector()) ok = false;
    r.check("roots.weight_vectors_null", W, ok);
  });
  return r;
}

// ---------------------------------------------------------------------------

inline Report check_serre(const CheckOptions& o, const RootDatum& rd, const SerreResult& sr) {
  using namespace detail;
  (void)o;
  Report r;
  const std::string L = "Serre basis and structure constants";
  const SerreBasis& s = sr.basis;

  guard(r, "serre.generators", L, [&] {
    r.check("serre.generators", L, true,
            {{"x", to_json(s.x.to_vector())}, {"X", to_json(s.X.to_vector())}, {"involution_applied", sr.involution_applied}});
  });

  guard(r, "serre.relations", L, [&] {
    bool ok = true;
    json w = json::object();
    for (const auto& rel : serre_relations(s)) {
      w[rel.name] = rel.holds;
      if (!rel.holds) ok = false;
    }
    r.check("serre.relations", L, ok, w);
  });

  guard(r, "serre.root_spaces", L, [&] {
    bool ok = s.xs[2] == s.x && s.Xs[0] == s.X;
    for (const auto& [name, v] : s.named()) {
      if (name == "h" || name == "H") continue;
      auto root = rd.by_value(eigen_functional(v));
      if (!root || !proportionality(v.to_vector(), root->vector.to_vector())) ok = false;
    }
    if (s.ys[1] != -bracket(s.y, s.Ys[0])) ok = false;
    r.check("serre.root_spaces", L, ok);
  });

  guard(r, "serre.table", L, [&] {
    auto diff = table_difference(sr.table, expected_structure_constants());
    r.check("serre.table", L, diff.empty(), {{"difference", diff}, {"text", format_constants_text(sr.table)}});
  });

  guard(r, "serre.table.entries", L, [&] {
    const auto want = expected_structure_constants();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        const auto& a = SerreBasis::kPositive[static_cast<std::size_t>(i)];
        const auto& b = SerreBasis::kNegative[static_cast<std::size_t>(j)];
        r.check("serre.table[" + a + "][" + b + "]", L, sr.table.c[i][j] == want.c[i][j],
                {{"value", sr.table.c[i][j].str()}, {"expected", want.c[i][j].str()}});
      }
  });

  guard(r, "serre.diagonal", L, [&] {
    json w = json::object();
    static const std::array<std::string, 6> dn = {"h1", "h2", "h3", "H1", "H2", "H3"};
    for (int i = 0; i < 6; ++i) w[dn[i]] = sr.table.diagonal[i].str();
    r.check("serre.diagonal", L, sr.table.diagonal == expected_structure_constants().diagonal, w);
  });

  guard(r, "serre.x1x2", L, [&] {
    r.check("serre.x1x2", L, bracket(s.xs[0], s.xs[1]) == s.Xs[2], {{"[x1,x2]", "X3"}});
  });

  guard(r, "serre.negation_symmetry", L, [&] { r.check("serre.negation_symmetry", L, negation_symmetry_holds(s)); });
  guard(r, "serre.swap_symmetry", L, [&] { r.check("serre.swap_symmetry", L, swap_symmetry_holds(s)); });

  guard(r, "serre.eigentables", L, [&] {
    bool h_ok = eigentables_match(eigentable(s, s.h), expected_eigentable_h());
    bool H_ok = eigentables_match(eigentable(s, s.H), expected_eigentable_H());
    bool x_nilpotent = ad_matrix(s.x, g2_basis()).pow(5).is_zero() && ad_matrix(s.X, g2_basis()).pow(3).is_zero();
    r.flag("serre.eigentables", L, h_ok && H_ok && x_nilpotent,
           "the two tables headed ad(x) and ad(X) are the spectra of ad(h) and ad(H); ad(x), ad(X) are nilpotent",
           {{"ad(h) table", h_ok}, {"ad(H) table", H_ok}, {"ad(x), ad(X) nilpotent", x_nilpotent}});
  });
  return r;
}

// ---------------------------------------------------------------------------

inline Report check_compact(const CheckOptions& o, const RootDatum& rd, const SerreResult& sr) {
  using namespace detail;
  Report r;
  Rng rng = group_rng(o, 5);
  const std::string L = "maximal compact subalgebra";
  const std::string K = "SU2 x SU2 action on V";
  const CompactBasis cb = compact_basis(sr.basis);

  guard(r, "compact.relations", L, [&] {
    bool ok = true;
    for (const auto& c : verify_compact_relations(cb))
      if (!c.holds) ok = false;
    r.check("compact.relations", L, ok,
            {{"[S1,S2]", "3/4 L3 - S3"}, {"[L1,L2]", "L3"}, {"[L1,S1]", bracket(cb.L[0], cb.S[0]).is_zero() ? "0" : "nonzero"}});
  });

  guard(r, "compact.ideal_split", L, [&] {
    bool ok = true;
    for (const auto& c : verify_ideal_split(cb))
      if (!c.holds) ok = false;
    r.check("compact.ideal_split", L, ok);
  });

  guard(r, "compact.quadratic", L, [&] {
    auto q = derive_quadratic(cb);
    bool ok = q.p == Rational(3, 4) && q.q == -1 && q.roots == std::vector<Rational>{Rational(-3, 2), Rational(1, 2)};
    r.check("compact.quadratic", L, ok,
            {{"polynomial", "x^2 + x - 3/4"}, {"coefficients", to_json(q.coefficients)}, {"roots", json::array({q.roots[0].str(), q.roots[1].str()})}});
  });

  guard(r, "compact.change_of_basis", L, [&] {
    Matrix m = compact_change_of_basis(cb);
    Vector s1 = compact_to_so3so3(cb, cb.S[0]);
    Vector l3 = compact_to_so3so3(cb, cb.L[2]);
    bool ok = proportionality(l3, {0, 0, 1, 0, 0, 1}).has_value();
    for (int i = 0; i < 3; ++i)
      if (s1[3 + i] != Rational(-3) * s1[i]) ok = false;
    Vector s1s = compact_to_so3so3(cb, cb.S[0], true);
    for (int i = 0; i < 3; ++i)
      if (s1s[3 + i] != Rational(-1, 3) * s1s[i]) ok = false;
    r.check("compact.change_of_basis", L, ok, {{"rows L1..L3, S1..S3", to_json(m)}});
  });

  guard(r, "compact.ratio_scan", L, [&] {
    auto d = compact_distribution_data(cb);
    auto ds = compact_distribution_data(cb, true);
    auto fits = [](const DistributionData& dd, const Rational& rho) {
      for (const auto& w : dd.plane)
        if (!satisfies_plane_equations(w, rho)) return false;
      return true;
    };
    json scan = json::object();
    bool ok = fits(d, 3) && fits(ds, Rational(1, 3));
    for (const Rational& rho : {Rational(1), Rational(2), Rational(5), Rational(1, 2)}) {
      bool f = fits(d, rho);
      scan[rho.str()] = f;
      if (f) ok = false;
    }
    scan["3"] = fits(d, 3);
    scan["1/3 (swapped)"] = fits(ds, Rational(1, 3));
    r.check("compact.ratio_scan", L, ok, {{"plane fits", scan}, {"ratio", ratio_of(d.plane[0]) ? ratio_of(d.plane[0])->str() : "none"}});
  });

  guard(r, "compact.derived_flag", L, [&] {
    auto dims = derived_flag(compact_distribution_data(cb));
    r.check("compact.derived_flag", L, dims == std::vector<std::size_t>{2, 3, 5} && plane_is_invariant(compact_distribution_data(cb)),
            {{"flag", dims_json(dims)}});
  });

  guard(r, "compact.weyl_basis", L, [&] {
    auto rec = weyl_basis_record(sr.basis, cb);
    r.check("compact.weyl_basis", L, true,
            {{"theta automorphism", rec.involution_is_automorphism}, {"k = fixed set of theta", rec.fixed_set_is_compact}});
  });

  const int n = at_least(o, 10);
  guard(r, "compact.ktilde_automorphism", K, [&] {
    bool ok = true;
    for (int t = 0; t < n; ++t) {
      Quaternion q1 = sample_unit_quaternion(rng), q2 = sample_unit_quaternion(rng);
      SplitOctonion x = random_imaginary(rng), y = random_imaginary(rng);
      auto act = [&](const SplitOctonion& v) { return ktilde_action(q1, q2, v); };
      SplitOctonion xy = x * y;
      SplitOctonion lhs = act(x) * act(y);
      SplitOctonion rhs = act(from_chart_a(to_chart_a(xy).first)) + SplitOctonion::real(xy.re());
      if (lhs != rhs || inner_product(act(x), act(y)) != inner_product(x, y)) ok = false;
    }
    bool unit = ktilde_action(Quaternion::real(1), Quaternion::real(1), basis_U()) == basis_U();
    r.check("compact.ktilde_automorphism", K, ok && unit, {{"samples", n}});
  });

  guard(r, "compact.ktilde_printed_action", K, [&] {
    bool printed = true;
    for (int t = 0; t < n; ++t) {
      Quaternion q1 = sample_unit_quaternion(rng), q2 = sample_unit_quaternion(rng);
      SplitOctonion x = random_imaginary(rng), y = random_imaginary(rng);
      auto act = [&](const SplitOctonion& v) { return ktilde_action_as_printed(q1, q2, v); };
      SplitOctonion xy = x * y;
      if (act(x) * act(y) != act(from_chart_a(to_chart_a(xy).first)) + SplitOctonion::real(xy.re())) printed = false;
    }
    r.flag("compact.ktilde_printed_action", K, !printed,
           "(q1 a q1bar, q1 b q2bar) is not an automorphism; (q1 a q1bar, q2 b q1bar) is used");
  });

  guard(r, "compact.ktilde_kernel", K, [&] {
    auto ker = ktilde_kernel_among_signs();
    bool ok = ker == std::vector<std::pair<int, int>>{{1, 1}, {-1, -1}} && ktilde_infinitesimal_rank() == 6;
    SplitOctonion v = random_imaginary(rng);
    ok = ok && ktilde_action(Quaternion::real(-1), Quaternion::real(1), v) == SplitOctonion{v.a, Rational(-1) * v.b};
    json k = json::array();
    for (auto [a, b] : ker) k.push_back(json::array({a, b}));
    r.check("compact.ktilde_kernel", K, ok, {{"kernel", k}, {"infinitesimal rank", ktilde_infinitesimal_rank()}});
  });

  guard(r, "compact.involutions", K, [&] {
    Matrix sigma = sigma_involution();
    Matrix minus = Rational(-1) * Matrix::identity(7);
    bool ok = sigma * sigma == Matrix::identity(7) && sigma != Matrix::identity(7);
    int pts = at_least(o, 10);
    for (int t = 0; t < pts; ++t) {
      SplitOctonion x = sample_null(rng);
      if (!involution_preserves_distribution(sigma, x) || !involution_preserves_distribution(minus, x)) ok = false;
    }
    (void)rd;
    r.check("compact.involutions", K, ok, {{"points", pts}});
  });
  return r;
}

// ---------------------------------------------------------------------------

inline Report check_rolling(const CheckOptions& o, const CompactBasis& cb) {
  using namespace detail;
  Report r;
  Rng rng = group_rng(o, 6);
  const std::string L = "rolling distribution on SO3 x S2";
  const std::vector<Rational> ratios = {3, Rational(1, 3), 2};

  guard(r, "rolling.base_examples", L, [&] {
    RollingState s3 = base_state(3), s2 = base_state(2);
    RollingTangent t = infinitesimal_action(s3, Vec3::unit(0), Vec3{-3, 0, 0});
    RollingTangent t2 = infinitesimal_action(s2, Vec3::unit(0), Vec3{-3, 0, 0});
    bool ok = is_rolling_tangent(s3, {}) && is_rolling_tangent(s3, t) && !is_rolling_tangent(s2, t2);
    r.check("rolling.base_examples", L, ok, {{"rho=3", is_rolling_tangent(s3, t)}, {"rho=2", is_rolling_tangent(s2, t2)}});
  });

  guard(r, "rolling.base_plane", L, [&] {
    bool ok = spans_equal(base_plane(3), {{1, 0, 0, -3, 0, 0}, {0, 1, 0, 0, -3, 0}});
    for (const Rational& rho : {Rational(1), Rational(3), Rational(1, 3), Rational(2), Rational(7, 5)}) {
      auto p = base_plane(rho);
      if (p.size() != 2) ok = false;
      for (const auto& w : p)
        if (!(w[2] + w[5]).is_zero()) ok = false;
    }
    r.check("rolling.base_plane", L, ok);
  });

  guard(r, "rolling.isotropy", L, [&] {
    RollingTangent t = infinitesimal_action(base_state(3), Vec3::unit(2), Vec3::unit(2));
    bool ok = t.gdot.is_zero() && t.xdot.is_zero();
    for (const auto& rho : ratios)
      if (!plane_is_invariant(extract_data(rho))) ok = false;
    r.check("rolling.isotropy", L, ok);
  });

  guard(r, "rolling.invariance", L, [&] {
    bool ok = true;
    int n = at_least(o, 20);
    for (const auto& rho : ratios)
      for (int t = 0; t < n; ++t) {
        RollingState s = random_state(rng, rho);
        RollingTangent v = rolling_tangent_from(s, rng.rational(), rng.rational());
        if (!is_rolling_tangent(s, v)) ok = false;
        Mat3 g1 = sample_so3(rng), g2 = sample_so3(rng);
        if (!is_rolling_tangent(group_action(g1, g2, s), push_tangent(g1, g2, v))) ok = false;
      }
    r.check("rolling.invariance", L, ok, {{"triples per ratio", n}, {"ratios", json::array({"3", "1/3", "2"})}});
  });

  guard(r, "rolling.spanning_fields", L, [&] {
    bool ok = true;
    auto [v1, v2] = spanning_fields(3);
    RollingState e1{Mat3::identity(), Vec3::unit(0), 3};
    RollingTangent a = evaluate_field(v1, e1);
    ok = a.gdot == hat(Vec3::unit(1)) && a.xdot == Rational(1, 4) * cross(Vec3::unit(1), Vec3::unit(0));
    for (int t = 0; t < at_least(o, 10); ++t) {
      RollingState s = random_state(rng, 3);
      RollingTangent f1 = evaluate_field(v1, s), f2 = evaluate_field(v2, s);
      if (!is_rolling_tangent(s, f1) || !is_rolling_tangent(s, f2)) ok = false;
      if (span_rank({f1.to_vector(), f2.to_vector()}) != 2) ok = false;
    }
    bool rejects = false;
    try {
      growth_vector(3, base_state(3));
    } catch (const DegeneratePoint&) {
      rejects = true;
    }
    r.check("rolling.spanning_fields", L, ok && rejects);
  });

  guard(r, "rolling.growth", L, [&] {
    bool ok = true;
    int n = at_least(o, 10);
    json w = json::object(), first;
    for (const Rational& rho : {Rational(3), Rational(2), Rational(1, 3)}) {
      std::vector<std::size_t> last;
      for (int t = 0; t < n; ++t) {
        RollingState s = random_state(rng, rho);
        if (first.is_null()) first = to_json(s.x);
        last = growth_vector(rho, s);
        if (last != std::vector<std::size_t>{2, 3, 5}) ok = false;
      }
      w[rho.str()] = dims_json(last);
    }
    r.check("rolling.growth", L, ok, {{"states per ratio", n}, {"growth", w}, {"first x", first}});
  });

  guard(r, "rolling.growth_equal_radii", L, [&] {
    std::vector<std::size_t> g = growth_vector(1, random_state(rng, 1));
    auto flag = derived_flag(extract_data(1));
    r.check("rolling.growth_equal_radii", L, g.back() < 5,
            {{"growth", dims_json(g)}, {"derived flag of data", dims_json(flag)}});
  });

  guard(r, "rolling.data", L, [&] {
    bool three = same_distribution_data(extract_data(3), compact_distribution_data(cb));
    bool third = same_distribution_data(extract_data(Rational(1, 3)), compact_distribution_data(cb, true));
    bool two = same_distribution_data(extract_data(2), compact_distribution_data(cb)) ||
               same_distribution_data(extract_data(2), compact_distribution_data(cb, true));
    r.check("rolling.data", L, three && third && !two, {{"rho=3", three}, {"rho=1/3 swapped", third}, {"rho=2", two}});
  });
  return r;
}

// ---------------------------------------------------------------------------

inline Report check_quadric(const CheckOptions& o, const RootDatum& rd) {
  using namespace detail;
  Report r;
  Rng rng = group_rng(o, 7);
  const std::string L = "null quadric and its distribution";
  const std::string C = "covering map onto the rolling space";
  const SplitOctonion e1 = quadric_base_point();

  guard(r, "quadric.chain", L, [&] {
    auto c = annihilator_chain(e1);
    bool ok = spans_equal(c.x0, {chart_a(basis_e(0)), chart_a(basis_f(1)), chart_a(basis_f(2))}) && c.nested();
    std::array<std::size_t, 5> want = {1, 3, 4, 6, 7};
    int n = at_least(o, 20);
    for (int t = 0; t < n; ++t) {
      SplitOctonion x = sample_null(rng);
      auto ch = annihilator_chain(x);
      if (ch.dims() != want || !ch.nested() || !(x * x).is_zero()) ok = false;
    }
    bool rejects = false;
    try {
      annihilator_chain(basis_U());
    } catch (const NotNull&) {
      rejects = true;
    }
    r.check("quadric.chain", L, ok && rejects, {{"dims", json::array({1, 3, 4, 6, 7})}, {"points", n}});
  });

  guard(r, "quadric.distribution_invariance", L, [&] {
    bool ok = true;
    int n = at_least(o, 10);
    for (int t = 0; t < n; ++t) {
      Matrix g = random_group_element(rd, rng);
      SplitOctonion x = sample_null(rng);
      if (!distribution_is_carried(g, x)) ok = false;
      if (quadric_distribution(x).rank() != 2) ok = false;
    }
    r.check("quadric.distribution_invariance", L, ok, {{"samples", n}});
  });

  guard(r, "quadric.isotropy", L, [&] {
    auto iso = isotropy_algebra(e1);
    bool ok = iso.size() == 9 && spans_equal(to_vectors(iso), to_vectors(build_parabolic(rd)));
    int n = at_least(o, 10);
    for (int t = 0; t < n; ++t)
      if (isotropy_algebra(sample_null(rng)).size() != 9) ok = false;
    r.check("quadric.isotropy", L, ok, {{"dim at e1", iso.size()}, {"equals p", ok}});
  });

  guard(r, "quadric.transitivity", L, [&] {
    bool ok = infinitesimal_transitivity(e1) == 6;
    int n = at_least(o, 20);
    for (int t = 0; t < n; ++t)
      if (infinitesimal_transitivity(sample_null(rng)) != 6) ok = false;
    r.check("quadric.transitivity", L, ok,
            {{"rank", 6}, {"points", n}, {"control rank at U (not null)", infinitesimal_transitivity(basis_U())}});
  });

  guard(r, "quadric.plane_data", L, [&] {
    auto w = quadric_plane_witness(rd);
    auto dims = derived_flag(distribution_data_of_quadric(rd));
    r.check("quadric.plane_data", L, w.spans_x0 && w.isotropy_fixes_line && dims == std::vector<std::size_t>{2, 3, 5},
            {{"sigma1 . e1", w.multiples[0].str() + " f2"}, {"-sigma2 . e1", w.multiples[1].str() + " f3"}, {"flag", dims_json(dims)}});
  });

  guard(r, "quadric.cover_derivative", C, [&] {
    bool ok = true;
    int n = at_least(o, 10);
    for (int t = 0; t < n; ++t) {
      Quaternion q = sample_unit_quaternion(rng);
      Quaternion qdot = Quaternion::imaginary(rng.vec3(3, 2)) * q;
      if (!rotation_derivative_identity(q, qdot)) ok = false;
    }
    r.check("quadric.cover_derivative", C, ok, {{"identity", "gdot g^-1 = hat(2 Im(qdot qbar))"}, {"samples", n}});
  });

  guard(r, "quadric.cover_equivariance", C, [&] {
    bool ok = true;
    int n = at_least(o, 10);
    for (int t = 0; t < n; ++t) {
      auto p = NormalizedNull::from(sample_normalized_null(rng));
      Quaternion q1 = sample_unit_quaternion(rng), q2 = sample_unit_quaternion(rng);
      RollingState lhs = covering_map(NormalizedNull::from(ktilde_action(q1, q2, p.octonion())), 3);
      RollingState rhs = group_action(rotation_of(q1), rotation_of(q2), covering_map(p, 3));
      if (lhs.g != rhs.g || lhs.x != rhs.x) ok = false;
      RollingState s = covering_map(p, 3);
      s.validate();
    }
    bool rejects = false;
    try {
      NormalizedNull::from(Rational(3) * basis_e(0));
    } catch (const NotNormalized&) {
      rejects = true;
    }
    r.check("quadric.cover_equivariance", C, ok && rejects, {{"samples", n}});
  });

  guard(r, "quadric.cover_two_to_one", C, [&] {
    bool ok = true;
    for (int t = 0; t < at_least(o, 10); ++t) {
      auto p = NormalizedNull::from(sample_normalized_null(rng));
      auto m = NormalizedNull::from(from_chart_a(sigma_involution() * chart_a(p.octonion())));
      RollingState a = covering_map(p, 3), b = covering_map(m, 3);
      if (a.g != b.g || a.x != b.x) ok = false;
    }
    r.check("quadric.cover_two_to_one", C, ok, {{"fibre", "(v,h) and (v,-h)"}});
  });

  guard(r, "quadric.cover_ratio", C, [&] {
    bool ok = true;
    int n = at_least(o, 5);
    json scan = json::object();
    for (const Rational& rho : {Rational(3), Rational(1, 3), Rational(1), Rational(2), Rational(5)}) {
      std::size_t matches = 0;
      Rng local = group_rng(o, 70);
      for (int t = 0; t < n; ++t)
        if (covering_matches_ratio(NormalizedNull::from(sample_normalized_null(local)), rho)) ++matches;
      scan[rho.str()] = matches;
      if (rho == 3 ? matches != static_cast<std::size_t>(n) : matches != 0) ok = false;
    }
    Rng local = group_rng(o, 71);
    auto rstar = realized_ratio(NormalizedNull::from(sample_normalized_null(local)));
    r.check("quadric.cover_ratio", C, ok && rstar && *rstar == 3,
            {{"realized ratio", rstar ? rstar->str() : "none"}, {"points matching", scan}, {"points", n}});
  });

  guard(r, "quadric.cover_convention", C, [&] {
    Rng local = group_rng(o, 72);
    auto p = NormalizedNull::from(sample_normalized_null(local));
    auto rv = realized_ratio(p, CoverRotation::v_hbar);
    auto rh = realized_ratio(p, CoverRotation::h);
    auto rhb = realized_ratio(p, CoverRotation::hbar);
    auto in_set = [](const std::optional<Rational>& x) { return x && (*x == 3 || *x == Rational(1, 3)); };
    r.flag("quadric.cover_convention", C, in_set(rv) && !in_set(rh),
           "the rotation part R_h does not carry D onto a rolling plane with positive ratio; R_{v hbar} does (ratio 3)",
           {{to_string(CoverRotation::v_hbar), rv ? json(rv->str()) : json(nullptr)},
            {to_string(CoverRotation::h), rh ? json(rh->str()) : json(nullptr)},
            {to_string(CoverRotation::hbar), rhb ? json(rhb->str()) : json(nullptr)}});
  });

  guard(r, "quadric.cover_floating", C, [&] {
    // floating-point spot check at unnormalized points; tolerance 1e-10
    double worst3 = 0, best2 = 1e300;
    for (int t = 0; t < 5; ++t) {
      std::array<double, 3> v{};
      std::array<double, 4> h{};
      for (auto& c : v) c = rng.rational(7, 3).to_double();
      for (auto& c : h) c = rng.rational(7, 3).to_double();
      if (v[0] == 0 && v[1] == 0 && v[2] == 0) v[0] = 1;
      if (h[0] == 0 && h[1] == 0 && h[2] == 0 && h[3] == 0) h[0] = 1;
      worst3 = std::max(worst3, covering_residual_floating(v, h, 3.0));
      best2 = std::min(best2, covering_residual_floating(v, h, 2.0));
    }
    r.check("quadric.cover_floating", C + " (floating)", worst3 < 1e-10 && best2 > 1e-6,
            {{"max residual rho=3", worst3 < 1e-10 ? "<1e-10" : "exceeds"}, {"tolerance", "1e-10"}, {"arithmetic", "double"}});
  });
  return r;
}

// ---------------------------------------------------------------------------

inline Report check_pfaffian(const CheckOptions& o, const RootDatum& rd) {
  using namespace detail;
  Report r;
  Rng rng = group_rng(o, 8);
  const std::string L = "Pfaffian system on V";
  const std::string N = "null 3-planes";
  const PfaffianSystem s = build_system();
  const int n = at_least(o, 10);

  guard(r, "pfaffian.dJ", L, [&] {
    r.check("pfaffian.dJ", L, (s.gamma1 + s.gamma2).C == dJ().C, {{"identity", "gamma1 + gamma2 = dJ"}});
  });

  guard(r, "pfaffian.base_reduction", L, [&] {
    Vector p = parse_cartan_point("x1,0,0");
    Vector dz = unit_vector(7, 6);
    bool ok = s.alpha[0].row_at(p) == -dz && is_zero(s.alpha[1].row_at(p)) && is_zero(s.alpha[2].row_at(p));
    r.check("pfaffian.base_reduction", L, ok, {{"alpha at (e1,0,0)", "(-dz, 0, 0)"}});
  });

  guard(r, "pfaffian.product_identity", L, [&] {
    bool ok = true;
    for (int t = 0; t < n; ++t) {
      auto id = product_identity(s, rng.vector(7), rng.vector(7));
      if (!id.imaginary_matches || !id.real_matches) ok = false;
    }
    r.flag("pfaffian.product_identity", L, ok,
           "(x,y,z)(dx,dy,dz) has imaginary part (-alpha, beta, -gamma/2); printed as (alpha, beta, (gamma1-gamma2)/2)",
           {{"real part", "(gamma1 + gamma2)/2"}});
  });

  guard(r, "pfaffian.case1", L, [&] {
    bool ok = true;
    for (int t = 0; t < n; ++t)
      for (const auto& c : case_one(s, rng.traceless()))
        if (!c.zero) ok = false;
    r.check("pfaffian.case1", L, ok, {{"L alpha", "A alpha"}, {"L beta", "-A^t beta"}, {"L gamma", "0"}});
  });

  guard(r, "pfaffian.case2", L, [&] {
    bool ok = true, printed = true;
    for (int t = 0; t < n; ++t) {
      Vec3 b = rng.vec3();
      if (b.is_zero()) continue;
      for (const auto& c : case_two(s, b))
        if (!c.zero) ok = false;
      bool all = true;
      for (const auto& c : case_two_as_printed(s, b)) all = all && c.zero;
      if (!all) printed = false;
    }
    r.flag("pfaffian.case2", L, ok && !printed, "L beta = b x alpha and L gamma = 2 b.beta; printed as b x beta and b.beta",
           {{"L alpha", "b gamma"}, {"L beta", "b x alpha"}, {"L gamma", "2 b.beta"}});
  });

  guard(r, "pfaffian.case3", L, [&] {
    bool ok = true, printed = true;
    for (int t = 0; t < n; ++t) {
      Vec3 c = rng.vec3();
      if (c.is_zero()) continue;
      for (const auto& x : case_three(s, c))
        if (!x.zero) ok = false;
      bool all = true;
      for (const auto& x : case_three_as_printed(s, c)) all = all && x.zero;
      if (!all) printed = false;
    }
    r.flag("pfaffian.case3", L, ok && !printed,
           "L alpha = -c x beta, L beta = c gamma, L gamma = 2 c.alpha; the x<->y, b<->c mirror of the printed case 2 fails",
           {{"L alpha", "-c x beta"}, {"L beta", "c gamma"}, {"L gamma", "2 c.alpha"}});
  });

  guard(r, "pfaffian.invariance", L, [&] {
    r.check("pfaffian.invariance", L, system_invariant_under_basis(s), {{"forms", 7}, {"generators", 14}});
  });

  guard(r, "pfaffian.cross_product_lemma", L, [&] {
    bool ok = true;
    for (int t = 0; t < n; ++t) {
      Vector a = rng.vector(9);
      if (!cross_product_lemma(Mat3::from(a, 0), rng.vec3(), rng.vec3())) ok = false;
    }
    r.check("pfaffian.cross_product_lemma", L, ok, {{"samples", n}});
  });

  guard(r, "pfaffian.gamma_identity", L, [&] {
    r.check("pfaffian.gamma_identity", L, all_zero(gamma_identity_residual(s)), {{"identity", "x.beta - y.alpha = z gamma"}});
  });

  guard(r, "pfaffian.rank_jump", L, [&] {
    Vector p1 = parse_cartan_point("x1,0,0"), p2 = parse_cartan_point("x1,y2,0");
    std::size_t k1 = system_rank_at(s.alpha_beta(), p1), k2 = system_rank_at(s.alpha_beta(), p2);
    std::size_t c1 = system_rank_at(s.corrected(), p1), c2 = system_rank_at(s.corrected(), p2);
    r.check("pfaffian.rank_jump", L, k1 == 4 && k2 == 3 && c1 == 3 && c2 == 3,
            {{"alpha=beta=0 at (e1,0,0)", k1}, {"alpha=beta=0 at (e1,e2,0)", k2}, {"with gamma at (e1,0,0)", c1},
             {"with gamma at (e1,e2,0)", c2}});
  });

  guard(r, "pfaffian.corrections", L, [&] {
    auto c = correction_identities(s, rng, n);
    bool uniform = true;
    for (int t = 0; t < n; ++t)
      if (system_rank_at(s.corrected(), sample_null_cartan(rng)) != 3) uniform = false;
    r.check("pfaffian.corrections", L,
            c.gamma_identity && c.dj_identity && c.cone_consequence && c.z_consequence && c.kernel_is_annihilator && uniform,
            {{"on J=0, gamma=0 gives gamma1=gamma2=0", c.cone_consequence},
             {"z != 0: gamma follows from alpha, beta", c.z_consequence},
             {"kernel equals x0", c.kernel_is_annihilator},
             {"kernel dim 3 on the cone", uniform},
             {"points", c.points}});
  });

  guard(r, "pfaffian.null_planes", N, [&] {
    auto ex = null_threeplane_family(Vec3::unit(0), Rational(-1) * Vec3::unit(0));
    bool ok = ex.size() == 3 && is_totally_null(ex);
    for (int t = 0; t < n; ++t) {
      auto [a, b] = sample_family_parameters(rng);
      auto plane = null_threeplane_family(a, b);
      auto back = recover_parameters(plane);
      if (plane.size() != 3 || !is_totally_null(plane) || !back || back->first != a || back->second != b) ok = false;
    }
    bool rejects = false;
    try {
      null_threeplane_family(Vec3::unit(0), Vec3::unit(0));
    } catch (const BadParameters&) {
      rejects = true;
    }
    r.check("pfaffian.null_planes", N, ok && rejects, {{"dim", 3}, {"parameters", "6 - 1 = 5"}, {"samples", n}});
  });

  guard(r, "pfaffian.null_planes_invariance", N, [&] {
    bool ok = true;
    std::size_t recovered = 0;
    int m = std::max(5, o.samples / 4);
    for (int t = 0; t < m; ++t) {
      auto [a, b] = sample_family_parameters(rng);
      auto img = carry_plane(random_group_element(rd, rng), null_threeplane_family(a, b));
      if (!img.dimension_three || !img.null) ok = false;
      if (img.parameters) {
        ++recovered;
        if (!img.matches_family) ok = false;
      }
    }
    r.check("pfaffian.null_planes_invariance", N, ok, {{"group elements", m}, {"parameters recovered", recovered}});
  });
  return r;
}

// ---------------------------------------------------------------------------

/// Names of the check groups in run order.
inline const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> g = {"core", "octonions", "g2", "roots", "serre", "compact", "rolling", "quadric", "pfaffian"};
  return g;
}

/// Shared expensive data, built once.
struct CheckContext {
  RootDatum rd = root_decomposition();
  SerreResult sr = serre_structure(rd);
  CompactBasis cb = compact_basis(sr.basis);
};

inline Report run_group(const std::string& name, const CheckOptions& o, const CheckContext& ctx) {
  if (name == "core") return check_exact_core(o);
  if (name == "octonions") return check_octonions(o);
  if (name == "g2") return check_g2(o, ctx.rd);
  if (name == "roots") return check_roots(o, ctx.rd);
  if (name == "serre") return check_serre(o, ctx.rd, ctx.sr);
  if (name == "compact") return check_compact(o, ctx.rd, ctx.sr);
  if (name == "rolling") return check_rolling(o, ctx.cb);
  if (name == "quadric") return check_quadric(o, ctx.rd);
  if (name == "pfaffian") return check_pfaffian(o, ctx.rd);
  throw BadParameters("unknown check group " + name);
}

inline Report verify_all(const CheckOptions& o) {
  CheckContext ctx;
  Report all;
  for (const auto& g : check_groups()) all.merge(run_group(g, o, ctx));
  return all;
}

}  // namespace g2roll
