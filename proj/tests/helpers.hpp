#pragma once

// Shared test utilities: seeded generators and independent oracles.  The
// oracles here deliberately avoid the production code paths they check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "quatspec/quatspec.hpp"

namespace qstest {

using namespace quatspec;

// --- generators --------------------------------------------------------------

/// Complex matrix with dyadic-rational entries (multiples of 1/64), suitable
/// for the exact oracle.
inline CMatrix sample_dyadic_cmatrix(SplitMix64& g, std::size_t n) {
  CMatrix m(n, n);
  for (auto& v : m.a) {
    const double re = std::floor(g.next_symmetric() * 64.0) / 64.0;
    const double im = std::floor(g.next_symmetric() * 64.0) / 64.0;
    v = Complex(re, im);
  }
  return m;
}

/// Quaternion matrix with dyadic entries (multiples of 1/16).
inline QMatrix sample_dyadic_qmatrix(SplitMix64& g, std::size_t n) {
  QMatrix m(n, n);
  for (auto& q : m.a) {
    q = Quaternion{std::floor(g.next_symmetric() * 16.0) / 16.0,
                   std::floor(g.next_symmetric() * 16.0) / 16.0,
                   std::floor(g.next_symmetric() * 16.0) / 16.0,
                   std::floor(g.next_symmetric() * 16.0) / 16.0};
  }
  return m;
}

/// Invertible quaternionic S with its exact inverse, assembled from shear
/// and diagonal factors whose inverses are known in closed form.
struct SimilarityPair {
  QMatrix s;
  QMatrix s_inv;
};

inline SimilarityPair sample_similarity(SplitMix64& g, std::size_t n) {
  QMatrix s = q_identity(n);
  QMatrix s_inv = q_identity(n);
  // diagonal of quaternions with modulus in [1/2, 2]
  {
    QMatrix d = q_identity(n), d_inv = q_identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      Quaternion q = g.next_quaternion();
      const double a = abs(q);
      if (a < 1e-3) q = q_one;
      const double target = 0.5 + 1.5 * g.next_unit();
      q = (target / abs(q)) * q;
      d(i, i) = q;
      d_inv(i, i) = inverse(q);
    }
    s = q_matmul(s, d);
    s_inv = q_matmul(d_inv, s_inv);
  }
  // a few shears E_ij(q), inverse E_ij(-q)
  const std::size_t shears = n;
  for (std::size_t k = 0; k < shears && n > 1; ++k) {
    const std::size_t i = g.next_u64() % n;
    std::size_t j = g.next_u64() % n;
    if (i == j) j = (j + 1) % n;
    const Quaternion q = 0.4 * g.next_quaternion();
    QMatrix e = q_identity(n), e_inv = q_identity(n);
    e(i, j) = q;
    e_inv(i, j) = -q;
    s = q_matmul(s, e);
    s_inv = q_matmul(e_inv, s_inv);
  }
  return {s, s_inv};
}

/// Quaternionic unitary: product of a diagonal of unit quaternions and real
/// Givens rotations.
inline QMatrix sample_unitary(SplitMix64& g, std::size_t n) {
  QMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Quaternion q = g.next_quaternion();
    if (abs(q) < 1e-3) q = q_one;
    u(i, i) = (1.0 / abs(q)) * q;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double th = 3.14159 * g.next_symmetric();
    QMatrix r = q_identity(n);
    r(k, k) = Quaternion(std::cos(th));
    r(k + 1, k + 1) = Quaternion(std::cos(th));
    r(k, k + 1) = Quaternion(std::sin(th));
    r(k + 1, k) = Quaternion(-std::sin(th));
    u = q_matmul(u, r);
  }
  return u;
}

// --- oracles -----------------------------------------------------------------

/// The k x k determinant form of the k-th exterior-power trace:
///   (1/k!) det [ p1  k-1  0 ... ; p2  p1  k-2 ... ; ... ; pk ... p1 ]
/// evaluated directly by LU, independent of the Newton recurrence.
inline Complex exterior_trace_det_form(const std::vector<Complex>& p,
                                       std::size_t k) {
  if (k == 0) return 1.0;
  CMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = p[i - j];
    if (i + 1 < k) m(i, i + 1) = static_cast<double>(k - 1 - i);
  }
  Complex d = det(m);
  double fact = 1.0;
  for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
  return d / fact;
}

/// Power sums of the roots recovered exactly from monic ascending
/// char-poly coefficients via Newton's identities:
///   p_m = e_1 p_{m-1} - e_2 p_{m-2} + ... + (-1)^m m e_m (sign-adjusted).
inline std::vector<Complex> power_sums_from_char_poly(const Polynomial& cp) {
  const std::size_t n = cp.degree();
  std::vector<Complex> e(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const Complex c = cp.coeffs[n - k];
    e[k] = ((k % 2) == 0 ? 1.0 : -1.0) * c;
  }
  std::vector<Complex> ps(n + 1, 0.0);
  for (std::size_t m = 1; m <= n; ++m) {
    Complex s = 0.0;
    for (std::size_t j = 1; j < m; ++j)
      s += ((j % 2) ? 1.0 : -1.0) * e[j] * ps[m - j];
    const double sgn = (m % 2) ? 1.0 : -1.0;
    ps[m] = s + sgn * static_cast<double>(m) * e[m];
  }
  return ps;
}

/// Checks that `eigs` is the root multiset of the exact characteristic
/// polynomial of `m` (n <= 8): power sums match and every value is a root.
inline bool matches_exact_spectrum(const CMatrix& m,
                                   const std::vector<Complex>& eigs,
                                   double tol) {
  if (eigs.size() != m.rows) return false;
  const Polynomial cp = char_poly_oracle(m);
  const std::vector<Complex> ps = power_sums_from_char_poly(cp);
  double scale = 1.0;
  for (Complex l : eigs) scale = std::max(scale, std::abs(l));
  for (std::size_t k = 1; k <= m.rows; ++k) {
    Complex s = 0.0;
    for (Complex l : eigs) s += std::pow(l, static_cast<double>(k));
    if (std::abs(s - ps[k]) > tol * std::pow(scale, static_cast<double>(k)) *
                                  static_cast<double>(m.rows))
      return false;
  }
  return true;
}

inline double max_coeff_deviation(const Polynomial& a, const Polynomial& b) {
  double worst = 0.0;
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Complex ca = k < a.coeffs.size() ? a.coeffs[k] : 0.0;
    const Complex cb = k < b.coeffs.size() ? b.coeffs[k] : 0.0;
    worst = std::max(worst, std::abs(ca - cb));
  }
  return worst;
}

}  // namespace qstest
