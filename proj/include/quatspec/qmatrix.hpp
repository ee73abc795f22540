#pragma once

#include <cstddef>
#include <vector>

#include "quatspec/cmatrix.hpp"
#include "quatspec/quaternion.hpp"

namespace quatspec {

/// Dense row-major quaternion matrix.  Acts on column vectors from the left;
/// scalars multiply vectors from the right.
struct QMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Quaternion> a;

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Quaternion& operator()(std::size_t i, std::size_t j) {
    return a[i * cols + j];
  }
  const Quaternion& operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  bool square() const { return rows == cols; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

inline void require_square(const QMatrix& m, const char* who) {
  if (!m.square())
    throw NonSquareError(std::string(who) + ": matrix is not square");
}

inline QMatrix q_identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = q_one;
  return m;
}

/// Product with the fixed multiplication order: row entry times column entry,
/// left to right.
inline QMatrix q_matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols != b.rows) throw ShapeMismatchError("q_matmul: shapes");
  QMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Quaternion aik = a(i, k);
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  return q_matmul(a, b);
}

inline QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeMismatchError("QMatrix sum shapes");
  QMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] + b.a[i];
  return c;
}

inline QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeMismatchError("QMatrix difference shapes");
  QMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] - b.a[i];
  return c;
}

inline QMatrix operator*(double s, const QMatrix& m) {
  QMatrix c(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) c.a[i] = s * m.a[i];
  return c;
}

/// Conjugate transpose.
inline QMatrix q_adjoint(const QMatrix& m) {
  QMatrix c(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) c(j, i) = conj(m(i, j));
  return c;
}

/// Matrix-vector action A v with the right-module convention.
inline QVector q_apply(const QMatrix& m, const QVector& v) {
  if (m.cols != v.size()) throw ShapeMismatchError("q_apply: shapes");
  QVector out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
  return out;
}

/// The symplectic split A = A1 + A2*j: each entry w + xi + yj + z*ij splits
/// exactly as (w + xi) + (y + zi)j.  Lossless.
struct SymplecticSplit {
  CMatrix a1;
  CMatrix a2;
};

inline SymplecticSplit symplectic_split(const QMatrix& m) {
  require_square(m, "symplectic_split");
  SymplecticSplit s{CMatrix(m.rows, m.cols), CMatrix(m.rows, m.cols)};
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    s.a1.a[i] = Complex(m.a[i].w, m.a[i].x);
    s.a2.a[i] = Complex(m.a[i].y, m.a[i].z);
  }
  return s;
}

/// Inverse of symplectic_split; exact bitwise round trip.
inline QMatrix merge_split(const SymplecticSplit& s) {
  QMatrix m(s.a1.rows, s.a1.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i)
    m.a[i] = Quaternion{s.a1.a[i].real(), s.a1.a[i].imag(), s.a2.a[i].real(),
                        s.a2.a[i].imag()};
  return m;
}

/// The 2n x 2n complex companion matrix
///   [  A1        A2      ]
///   [ -conj(A2)  conj(A1)]
/// built from the split A = A1 + A2*j (entrywise conjugation, no transpose).
/// Its spectrum is the conjugate-paired complex spectrum of A, and it is
/// multiplicative: companion(A*B) = companion(A)*companion(B).
inline CMatrix companion(const QMatrix& m) {
  require_square(m, "companion");
  const std::size_t n = m.rows;
  const SymplecticSplit s = symplectic_split(m);
  CMatrix c(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      c(i, j) = s.a1(i, j);
      c(i, j + n) = s.a2(i, j);
      c(i + n, j) = -std::conj(s.a2(i, j));
      c(i + n, j + n) = std::conj(s.a1(i, j));
    }
  return c;
}

/// Gram matrix G of a rank-one sum: G(k, m) = <xps[k], xs[m]> under the
/// canonical conjugate-left pairing.  This is the matrix of the rank-n map
/// v |-> sum_k xs[k] <xps[k], v> on the basis {xs}.
inline QMatrix gram_from_rank_one_sum(const std::vector<QVector>& xs,
                                      const std::vector<QVector>& xps) {
  if (xs.size() != xps.size())
    throw ShapeMismatchError("gram_from_rank_one_sum: rank mismatch");
  const std::size_t n = xs.size();
  QMatrix g(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) g(k, m) = inner(xps[k], xs[m]);
  }
  return g;
}

}  // namespace quatspec
