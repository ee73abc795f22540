#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "quatspec/invariants.hpp"
#include "quatspec/qmatrix.hpp"

namespace quatspec {

/// Singular values of A, nonincreasing: square roots of the n paired
/// eigenvalues of companion(A* A).  The 2n eigenvalues occur in near-equal
/// real pairs; each pair yields sqrt(pair mean).  A pair mean below
/// -tol * scale raises NegativeEigenvalueError; small negatives are clamped
/// to zero.
inline std::vector<double> singular_values(const QMatrix& m,
                                           double tol = 1e-8) {
  require_square(m, "singular_values");
  const QMatrix gram = q_matmul(q_adjoint(m), m);
  const std::vector<Complex> ev = eigenvalues(companion(gram));

  double scale = 1.0;
  for (Complex v : ev) scale = std::max(scale, std::abs(v));
  std::vector<double> parts;
  parts.reserve(ev.size());
  for (Complex v : ev) {
    if (std::abs(v.imag()) > tol * scale)
      throw PairingError("singular_values: nonreal eigenvalue of A*A");
    parts.push_back(v.real());
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());

  std::vector<double> sv;
  sv.reserve(m.rows);
  for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
    if (std::abs(parts[i] - parts[i + 1]) > 2.0 * tol * scale)
      throw PairingError("singular_values: eigenvalues of A*A unpaired");
    double mean = 0.5 * (parts[i] + parts[i + 1]);
    if (mean < -tol * scale)
      throw NegativeEigenvalueError("singular_values: negative eigenvalue");
    sv.push_back(std::sqrt(std::max(mean, 0.0)));
  }
  return sv;
}

/// Schatten norm (sum_n mu_n^p)^(1/p); a quasi-norm for p < 1.
inline double schatten_norm(const QMatrix& m, double p, double tol = 1e-8) {
  if (!(p > 0.0)) throw InvalidExponentError("schatten_norm: p must be > 0");
  double s = 0.0;
  for (double mu : singular_values(m, tol)) s += std::pow(mu, p);
  return std::pow(s, 1.0 / p);
}

inline double lp_norm(const std::vector<Complex>& v, double p) {
  double s = 0.0;
  for (Complex x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

inline double lp_norm(const std::vector<double>& v, double p) {
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

struct WeylCheck {
  double lhs = 0.0;  ///< l^p norm of the standard eigenvalues
  double rhs = 0.0;  ///< Schatten-p norm
  bool ok = false;
};

/// The eigenvalue-singular value inequality |{l_k}|_p <= |A|_p, p >= 1,
/// with slack 1e-8 * max(1, rhs).
inline WeylCheck weyl_check(const QMatrix& m, double p) {
  if (!(p >= 1.0)) throw InvalidExponentError("weyl_check: p must be >= 1");
  WeylCheck w;
  w.lhs = lp_norm(standard_eigenvalues(m), p);
  w.rhs = schatten_norm(m, p);
  w.ok = w.lhs <= w.rhs + 1e-8 * std::max(1.0, w.rhs);
  return w;
}

}  // namespace quatspec
