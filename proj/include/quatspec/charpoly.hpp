#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "quatspec/cmatrix.hpp"
#include "quatspec/eigensolver.hpp"
#include "quatspec/polynomial.hpp"

namespace quatspec {

/// Determinant via LU with partial pivoting.
inline Complex det(const CMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows;
  if (n == 0) return 1.0;
  CMatrix lu = m;
  Complex d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      d = -d;
    }
    d *= lu(k, k);
    const Complex inv = 1.0 / lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) * inv;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return d;
}

/// Power sums p_m = tr(M^m) for m = 1..kmax, sharing one running power.
inline std::vector<Complex> power_traces(const CMatrix& m, std::size_t kmax) {
  require_square(m, "power_traces");
  std::vector<Complex> p(kmax);
  if (kmax == 0) return p;
  CMatrix mp = m;
  p[0] = trace(mp);
  for (std::size_t k = 1; k < kmax; ++k) {
    mp = mp * m;
    p[k] = trace(mp);
  }
  return p;
}

/// Elementary symmetric invariants e_0..e_kmax of the spectrum of M
/// (e_k = tr of the k-th exterior power), via the Newton recurrence
///   e_k = (1/k) sum_{m=1..k} (-1)^(m-1) e_{k-m} p_m,  p_m = tr(M^m).
/// kmax may exceed n; entries beyond n are ~0.
inline std::vector<Complex> exterior_traces(const CMatrix& m,
                                            std::size_t kmax) {
  require_square(m, "exterior_traces");
  const std::vector<Complex> p = power_traces(m, kmax);
  std::vector<Complex> e(kmax + 1);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    Complex s = 0.0;
    for (std::size_t mm = 1; mm <= k; ++mm) {
      const Complex term = e[k - mm] * p[mm - 1];
      s += (mm % 2 == 1) ? term : -term;
    }
    e[k] = s / static_cast<double>(k);
  }
  return e;
}

/// tr of the k-th exterior power of M, 0 <= k <= n.
inline Complex exterior_trace(const CMatrix& m, std::size_t k) {
  require_square(m, "exterior_trace");
  if (k > m.rows)
    throw KOutOfRangeError("exterior_trace: k exceeds matrix size");
  return exterior_traces(m, k)[k];
}

/// Characteristic polynomial det(Iz - M), monic, ascending coefficients.
///
/// Faddeev-LeVerrier up to n = 64 (exact in exact arithmetic), expansion
/// over computed eigenvalues beyond that.
inline Polynomial char_poly(const CMatrix& m, double tol = 1e-12,
                            std::size_t max_iter = 0) {
  require_square(m, "char_poly");
  const std::size_t n = m.rows;
  if (n == 0) return Polynomial{{1.0}};

  if (n <= 64) {
    std::vector<Complex> c(n + 1);
    c[n] = 1.0;
    CMatrix mk = CMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
      if (k > 1) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
      }
      c[n - k] = -trace(m * mk) / static_cast<double>(k);
    }
    return Polynomial{std::move(c)};
  }
  return poly_from_roots(eigenvalues(m, tol, max_iter));
}

}  // namespace quatspec
