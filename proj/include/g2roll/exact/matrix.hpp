#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "g2roll/error.hpp"
#include "g2roll/exact/rational.hpp"

namespace g2roll {

using Vector = std::vector<Rational>;

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator-(Vector a) {
  for (auto& x : a) x = -x;
  return a;
}

inline Vector operator*(const Rational& s, Vector a) {
  for (auto& x : a) x *= s;
  return a;
}

inline Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

/// If u is a scalar multiple of v (v nonzero), returns the scalar.
inline std::optional<Rational> proportionality(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionMismatch("proportionality");
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      lambda = u[i] / v[i];
      break;
    }
  }
  if (!lambda) return std::nullopt;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (u[i] != *lambda * v[i]) return std::nullopt;
  return lambda;
}

// ---------------------------------------------------------------------------

struct Vec3 {
  std::array<Rational, 3> v{};

  Vec3() = default;
  Vec3(Rational a, Rational b, Rational c) : v{std::move(a), std::move(b), std::move(c)} {}

  static Vec3 unit(int i) {
    Vec3 r;
    r[i] = 1;
    return r;
  }
  static Vec3 from(const Vector& x, std::size_t offset = 0) { return {x.at(offset), x.at(offset + 1), x.at(offset + 2)}; }

  Rational& operator[](std::size_t i) { return v[i]; }
  const Rational& operator[](std::size_t i) const { return v[i]; }

  Vector to_vector() const { return {v[0], v[1], v[2]}; }
  bool is_zero() const { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }
  Rational norm2() const { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

  Vec3& operator+=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) v[i] += o.v[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) v[i] -= o.v[i];
    return *this;
  }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
  friend Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Vec3& a) {
    return os << "(" << a[0] << "," << a[1] << "," << a[2] << ")";
  }
};

inline Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct Mat3 {
  std::array<Rational, 9> m{};

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1;
    return r;
  }
  static Mat3 unit(int i, int j) {
    Mat3 r;
    r(i, j) = 1;
    return r;
  }
  static Mat3 diag(Rational a, Rational b, Rational c) {
    Mat3 r;
    r(0, 0) = std::move(a);
    r(1, 1) = std::move(b);
    r(2, 2) = std::move(c);
    return r;
  }
  static Mat3 from_columns(const Vec3& a, const Vec3& b, const Vec3& c) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      r(i, 0) = a[i];
      r(i, 1) = b[i];
      r(i, 2) = c[i];
    }
    return r;
  }
  /// Row-major, nine entries.
  static Mat3 from(const Vector& x, std::size_t offset = 0) {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = x.at(offset + k);
    return r;
  }

  Rational& operator()(int i, int j) { return m[3 * i + j]; }
  const Rational& operator()(int i, int j) const { return m[3 * i + j]; }

  Vec3 column(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  Rational trace() const { return m[0] + m[4] + m[8]; }
  Rational det() const {
    const Mat3& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  }
  Mat3 inverse() const {
    Rational d = det();
    if (d.is_zero()) throw SingularMatrix("3x3 inverse");
    const Mat3& a = *this;
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
        r(i, j) = (a(i1, j1) * a(i2, j2) - a(i1, j2) * a(i2, j1)) / d;
      }
    return r;
  }
  bool is_zero() const {
    for (const auto& x : m)
      if (!x.is_zero()) return false;
    return true;
  }
  Vector to_vector() const { return Vector(m.begin(), m.end()); }

  Mat3& operator+=(const Mat3& o) {
    for (int k = 0; k < 9; ++k) m[k] += o.m[k];
    return *this;
  }
  Mat3& operator-=(const Mat3& o) {
    for (int k = 0; k < 9; ++k) m[k] -= o.m[k];
    return *this;
  }
  friend Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
  friend Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
  friend Mat3 operator-(Mat3 a) {
    for (auto& x : a.m) x = -x;
    return a;
  }
  friend Mat3 operator*(const Rational& s, Mat3 a) {
    for (auto& x : a.m) x *= s;
    return a;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rational s;
        for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend Vec3 operator*(const Mat3& a, const Vec3& x) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = a(i, 0) * x[0] + a(i, 1) * x[1] + a(i, 2) * x[2];
    return r;
  }
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

/// outer product u vᵗ
inline Mat3 outer(const Vec3& u, const Vec3& v) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = u[i] * v[j];
  return r;
}

/// hat(u) x = u × x
inline Mat3 hat(const Vec3& u) {
  Mat3 r;
  r(0, 1) = -u[2];
  r(0, 2) = u[1];
  r(1, 0) = u[2];
  r(1, 2) = -u[0];
  r(2, 0) = -u[1];
  r(2, 1) = u[0];
  return r;
}

/// Inverse of hat on antisymmetric matrices.
inline Vec3 vee(const Mat3& a) { return {a(2, 1), a(0, 2), a(1, 0)}; }

inline bool is_antisymmetric(const Mat3& a) { return (a + a.transpose()).is_zero(); }

// ---------------------------------------------------------------------------

/// Dense rational matrix with explicit shape.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
    return r;
  }
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix r(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) r(i, j) = rows[i][j];
    }
    return r;
  }
  static Matrix from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) throw DimensionMismatch("no rows given");
    return from_rows(rows, rows.front().size());
  }
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
  }
  static Matrix from(const Mat3& a) {
    Matrix r(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = a(i, j);
    return r;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vector column(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  /// Row-major flattening.
  const Vector& flat() const { return data_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Rational trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
    Rational s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }
  bool is_zero() const { return g2roll::is_zero(data_); }

  Matrix& operator+=(const Matrix& o) {
    check_same(o, "matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o, "matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector product");
    Vector r = zero_vector(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!x[j].is_zero()) r[i] += a(i, j) * x[j];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix pow(unsigned n) const {
    Matrix r = identity(rows_);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  /// Reduced row echelon form; pivot columns are returned through `pivots`.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const {
    Matrix r = *this;
    std::vector<std::size_t> piv;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
      std::size_t p = lead_row;
      while (p < rows_ && r(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != lead_row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(r(p, j), r(lead_row, j));
      Rational inv = Rational(1) / r(lead_row, c);
      for (std::size_t j = c; j < cols_; ++j) r(lead_row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == lead_row || r(i, c).is_zero()) continue;
        Rational f = r(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          if (!r(lead_row, j).is_zero()) r(i, j) -= f * r(lead_row, j);
      }
      piv.push_back(c);
      ++lead_row;
    }
    if (pivots) *pivots = std::move(piv);
    return r;
  }

  std::size_t rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
  }

  Rational det() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    Matrix r = *this;
    Rational d(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && r(p, c).is_zero()) ++p;
      if (p == rows_) return Rational(0);
      if (p != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(r(p, j), r(c, j));
        d = -d;
      }
      d *= r(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (r(i, c).is_zero()) continue;
        Rational f = r(i, c) / r(c, c);
        for (std::size_t j = c; j < cols_; ++j) r(i, j) -= f * r(c, j);
      }
    }
    return d;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    aug.set_block(0, 0, *this);
    aug.set_block(0, cols_, identity(rows_));
    std::vector<std::size_t> piv;
    Matrix r = aug.rref(&piv);
    if (piv.size() < rows_ || piv.back() >= cols_) throw SingularMatrix("matrix inverse");
    return r.block(0, cols_, rows_, cols_);
  }

 private:
  void check_same(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch(what);
  }

  std::size_t rows_ = 0, cols_ = 0;
  Vector data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) os << to_string(m.row(i)) << "\n";
  return os;
}

/// Exact basis of the right nullspace.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = m.rref(&piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = rhs, or nullopt when inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("solve");
  Matrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = rhs[i];
  std::vector<std::size_t> piv;
  Matrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, m.cols());
  return x;
}

// Subspaces are carried as lists of spanning vectors of a common length.

inline std::size_t span_rank(const std::vector<Vector>& vs) {
  if (vs.empty()) return 0;
  return Matrix::from_rows(vs).rank();
}

/// Row-reduced basis of span(vs).
inline std::vector<Vector> span_basis(const std::vector<Vector>& vs) {
  if (vs.empty()) return {};
  std::vector<std::size_t> piv;
  Matrix r = Matrix::from_rows(vs).rref(&piv);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < piv.size(); ++k) out.push_back(r.row(k));
  return out;
}

inline bool in_span(const std::vector<Vector>& vs, const Vector& v) {
  if (is_zero(v)) return true;
  if (vs.empty()) return false;
  std::vector<Vector> ext = vs;
  ext.push_back(v);
  return span_rank(ext) == span_rank(vs);
}

inline bool span_contains(const std::vector<Vector>& big, const std::vector<Vector>& small) {
  std::vector<Vector> ext = big;
  ext.insert(ext.end(), small.begin(), small.end());
  return span_rank(ext) == span_rank(big);
}

inline bool spans_equal(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  return span_contains(a, b) && span_contains(b, a);
}

/// Coordinates of v in terms of the (independent) vectors vs, if v lies in their span.
inline std::optional<Vector> coordinates_in(const std::vector<Vector>& vs, const Vector& v) {
  if (vs.empty()) return is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
  return solve(Matrix::from_columns(vs, v.size()), v);
}

/// Orthogonal complement of span(vs) with respect to a symmetric Gram matrix.
inline std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vs, const Matrix& gram) {
  if (vs.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < gram.rows(); ++i) all.push_back(unit_vector(gram.rows(), i));
    return all;
  }
  std::vector<Vector> rows;
  for (const auto& v : vs) rows.push_back(gram * v);
  return kernel_basis(Matrix::from_rows(rows));
}

struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
};

/// Sylvester inertia of a symmetric matrix by congruence diagonalization.
inline Inertia inertia(Matrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inertia of a non-square matrix");
  Inertia r;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      // bring a nonzero diagonal entry to k, or make one from an off-diagonal pair
      std::size_t p = k + 1;
      while (p < n && m(p, p).is_zero()) ++p;
      if (p < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, p));
      } else {
        std::size_t q = k + 1;
        while (q < n && m(k, q).is_zero()) ++q;
        if (q == n) {
          ++r.zero;
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) m(k, j) += m(q, j);
        for (std::size_t i = 0; i < n; ++i) m(i, k) += m(i, q);
      }
    }
    const Rational pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Rational f = m(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) m(i, k) = m(k, i) = Rational(0);
    (pivot.sign() > 0 ? r.positive : r.negative)++;
  }
  return r;
}

}  // namespace g2roll
