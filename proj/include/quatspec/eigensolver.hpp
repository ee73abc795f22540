#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "quatspec/cmatrix.hpp"

namespace quatspec {

namespace detail {

/// Parlett-Reinsch balancing: diagonal similarity scaling by powers of the
/// radix so row and column 1-norms become comparable.  Eigenvalues are
/// preserved exactly (scale factors are powers of 2).
inline void balance(CMatrix& h) {
  const std::size_t n = h.rows;
  constexpr double radix = 2.0;
  constexpr double sq = radix * radix;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(h(j, i));
        r += std::abs(h(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sq;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sq;
      }
      if ((c + r) / f < 0.95 * s) {
        again = true;
        const double ginv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) h(i, j) *= ginv;
        for (std::size_t j = 0; j < n; ++j) h(j, i) *= f;
      }
    }
  }
}

/// Householder reduction to upper Hessenberg form (similarity).
inline void hessenberg(CMatrix& h) {
  const std::size_t n = h.rows;
  if (n < 3) return;
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm += std::norm(h(i, k));
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;

    const Complex alpha = h(k + 1, k);
    const Complex phase =
        (alpha == 0.0) ? Complex(1.0) : alpha / std::abs(alpha);
    const Complex sigma = -phase * norm;

    // v spans the reflector P = I - beta v v^H with P x = sigma e1.
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= sigma;
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
    if (vnorm == 0.0) continue;
    const double beta = 2.0 / vnorm;

    // H <- P H  (rows k+1..n-1)
    for (std::size_t j = k; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * s;
    }
    // H <- H P  (columns k+1..n-1)
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      s *= beta;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j]);
    }
    h(k + 1, k) = sigma;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

/// Complex Givens rotation with real c: [c, s; -conj(s), c] [f; g] = [r; 0].
struct Givens {
  double c = 1.0;
  Complex s = 0.0;
};

inline Givens make_givens(Complex f, Complex g, Complex& r) {
  if (g == 0.0) {
    r = f;
    return {1.0, 0.0};
  }
  if (f == 0.0) {
    r = g;
    return {0.0, 1.0};
  }
  const double af = std::abs(f);
  const double rho = std::hypot(af, std::abs(g));
  Givens gv;
  gv.c = af / rho;
  gv.s = (f / af) * std::conj(g) / rho;
  r = f * (rho / af);
  return gv;
}

/// Eigenvalues of a complex 2x2 block, stable quadratic.
inline void eig_2x2(Complex a, Complex b, Complex c, Complex d, Complex& l1,
                    Complex& l2) {
  const Complex m = 0.5 * (a + d);
  const Complex det = a * d - b * c;
  const Complex disc = std::sqrt(m * m - det);
  // Pick the root of larger magnitude first to avoid cancellation.
  l1 = (std::abs(m + disc) >= std::abs(m - disc)) ? m + disc : m - disc;
  l2 = (l1 == 0.0) ? l1 : det / l1;
}

}  // namespace detail

/// Eigenvalues of a square complex matrix, with multiplicity.
///
/// Balanced Hessenberg reduction followed by implicitly restarted single
/// (Wilkinson) shift QR with deflation.  The subdiagonal entry h(k+1, k) is
/// deflated once |h(k+1,k)| <= tol * (|h(k,k)| + |h(k+1,k+1)|).  Results are
/// sorted by descending modulus, ties by ascending argument.
///
/// Throws NoConvergenceError (carrying the eigenvalues deflated so far) if
/// the sweep budget is exhausted; max_iter == 0 selects the default 40 n.
inline std::vector<Complex> eigenvalues(const CMatrix& m, double tol = 1e-12,
                                        std::size_t max_iter = 0) {
  require_square(m, "eigenvalues");
  const std::size_t n = m.rows;
  std::vector<Complex> w;
  w.reserve(n);
  if (n == 0) return w;
  if (max_iter == 0) max_iter = 40 * n;

  CMatrix h = m;
  detail::balance(h);
  detail::hessenberg(h);

  std::size_t hi = n;  // active block is rows/cols [lo, hi)
  std::size_t total_sweeps = 0;
  std::size_t since_deflation = 0;

  while (hi > 0) {
    // Find the start of the trailing unreduced block.
    std::size_t lo = hi - 1;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      if (sub <= tol * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo)))) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }

    if (lo + 1 == hi) {
      w.push_back(h(hi - 1, hi - 1));
      --hi;
      since_deflation = 0;
      continue;
    }
    if (lo + 2 == hi) {
      Complex l1, l2;
      detail::eig_2x2(h(hi - 2, hi - 2), h(hi - 2, hi - 1), h(hi - 1, hi - 2),
                      h(hi - 1, hi - 1), l1, l2);
      w.push_back(l1);
      w.push_back(l2);
      hi -= 2;
      since_deflation = 0;
      continue;
    }

    if (total_sweeps >= max_iter) {
      std::sort(w.begin(), w.end(), [](Complex a, Complex b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
        return std::arg(a) < std::arg(b);
      });
      throw NoConvergenceError("eigenvalues: QR sweep budget exhausted",
                               std::move(w));
    }

    // Shift selection.
    Complex shift;
    if (since_deflation > 0 && since_deflation % 12 == 0) {
      // Exceptional shift to break stagnation cycles.
      shift = std::abs(h(hi - 1, hi - 2)) + std::abs(h(hi - 2, hi - 3));
    } else {
      Complex l1, l2;
      detail::eig_2x2(h(hi - 2, hi - 2), h(hi - 2, hi - 1), h(hi - 1, hi - 2),
                      h(hi - 1, hi - 1), l1, l2);
      const Complex corner = h(hi - 1, hi - 1);
      shift = (std::abs(l1 - corner) <= std::abs(l2 - corner)) ? l1 : l2;
    }

    // One explicit shifted QR sweep on the active block:
    // H - shift I = Q R, then H <- R Q + shift I.
    for (std::size_t i = lo; i < hi; ++i) h(i, i) -= shift;

    std::vector<detail::Givens> rot(hi - 1 - lo);
    for (std::size_t i = lo; i + 1 < hi; ++i) {
      Complex r;
      rot[i - lo] = detail::make_givens(h(i, i), h(i + 1, i), r);
      const detail::Givens& g = rot[i - lo];
      h(i, i) = r;
      h(i + 1, i) = 0.0;
      for (std::size_t j = i + 1; j < hi; ++j) {
        const Complex t1 = h(i, j);
        const Complex t2 = h(i + 1, j);
        h(i, j) = g.c * t1 + g.s * t2;
        h(i + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
      }
    }
    for (std::size_t i = lo; i + 1 < hi; ++i) {
      const detail::Givens& g = rot[i - lo];
      const std::size_t rmax = std::min(i + 2, hi);
      for (std::size_t r = lo; r < rmax; ++r) {
        const Complex t1 = h(r, i);
        const Complex t2 = h(r, i + 1);
        h(r, i) = t1 * g.c + t2 * std::conj(g.s);
        h(r, i + 1) = -t1 * g.s + t2 * g.c;
      }
    }
    for (std::size_t i = lo; i < hi; ++i) h(i, i) += shift;

    ++total_sweeps;
    ++since_deflation;
  }

  std::sort(w.begin(), w.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return std::arg(a) < std::arg(b);
  });
  return w;
}

}  // namespace quatspec
