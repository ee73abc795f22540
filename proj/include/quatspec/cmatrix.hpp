#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "quatspec/errors.hpp"

namespace quatspec {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
struct CMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Complex& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  bool square() const { return rows == cols; }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;
};

inline void require_square(const CMatrix& m, const char* who) {
  if (!m.square())
    throw NonSquareError(std::string(who) + ": matrix is not square");
}

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols != b.rows) throw ShapeMismatchError("CMatrix product shapes");
  CMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeMismatchError("CMatrix sum shapes");
  CMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] + b.a[i];
  return c;
}

inline CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeMismatchError("CMatrix difference shapes");
  CMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] - b.a[i];
  return c;
}

inline CMatrix operator*(Complex s, const CMatrix& m) {
  CMatrix c(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) c.a[i] = s * m.a[i];
  return c;
}

inline Complex trace(const CMatrix& m) {
  require_square(m, "trace");
  Complex t = 0.0;
  for (std::size_t i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

inline CMatrix adjoint(const CMatrix& m) {
  CMatrix c(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) c(j, i) = std::conj(m(i, j));
  return c;
}

inline double max_abs(const CMatrix& m) {
  double v = 0.0;
  for (const Complex& e : m.a) v = std::max(v, std::abs(e));
  return v;
}

}  // namespace quatspec
