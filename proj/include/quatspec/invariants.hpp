#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "quatspec/charpoly.hpp"
#include "quatspec/eigensolver.hpp"
#include "quatspec/polynomial.hpp"
#include "quatspec/qmatrix.hpp"

namespace quatspec {

/// First-order trace 2 * sum_l Re(a_ll).  Summed in two passes, matching the
/// diagonal order of companion(A) so the value equals tr(companion(A))
/// bit-exactly.
inline double trace1(const QMatrix& m) {
  require_square(m, "trace1");
  double t = 0.0;
  for (std::size_t i = 0; i < m.rows; ++i) t += m(i, i).w;
  for (std::size_t i = 0; i < m.rows; ++i) t += m(i, i).w;
  return t;
}

namespace detail {

/// Asserts the imaginary residue of a nominally real value is below
/// 1e-10 * scale and discards it.
inline double discard_imag(Complex v, double scale, const char* who) {
  if (std::abs(v.imag()) > 1e-10 * scale)
    throw ImaginaryResidueError(std::string(who) +
                                ": imaginary residue too large");
  return v.real();
}

}  // namespace detail

/// All k-th order traces T_0..T_kmax of A in one pass: the elementary
/// symmetric invariants of companion(A), which are real; the imaginary
/// residue is asserted small and dropped.
inline std::vector<double> traces_all(const QMatrix& m, std::size_t kmax) {
  require_square(m, "traces_all");
  const std::size_t deg = 2 * m.rows;
  const std::vector<Complex> e =
      exterior_traces(companion(m), std::min(kmax, deg));
  double scale = 1.0;
  for (const Complex& v : e) scale = std::max(scale, std::abs(v));
  std::vector<double> t(kmax + 1, 0.0);
  for (std::size_t k = 0; k < e.size() && k <= kmax; ++k)
    t[k] = detail::discard_imag(e[k], scale, "traces_all");
  return t;
}

/// k-th order trace: tr of the k-th exterior power of companion(A).
/// Zero for k > 2n by convention; T_0 = 1.
inline double trace_k(const QMatrix& m, std::size_t k) {
  require_square(m, "trace_k");
  if (k == 0) return 1.0;
  if (k > 2 * m.rows) return 0.0;
  return traces_all(m, k)[k];
}

enum class DetSign {
  minus_zA,  ///< det_H(I - zA): coefficient k is (-1)^k T_k
  plus_zA    ///< det_H(I + zA): coefficient k is T_k
};

/// Fredholm determinant polynomial of A: degree <= 2n with real
/// coefficients (+-1)^k T_k(A).  For DetSign::minus_zA this equals the
/// characteristic polynomial of I - z*companion(A).  Exactly-zero leading
/// coefficients are trimmed (the zero matrix yields [1]).
inline Polynomial fredholm_poly(const QMatrix& m,
                                DetSign sign = DetSign::minus_zA) {
  require_square(m, "fredholm_poly");
  const std::size_t deg = 2 * m.rows;
  const std::vector<double> t = traces_all(m, deg);
  Polynomial p;
  p.coeffs.resize(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    double c = t[k];
    if (sign == DetSign::minus_zA && k % 2 == 1) c = -c;
    p.coeffs[k] = Complex(c, 0.0);
  }
  p.trim();
  return p;
}

/// Standard eigenvalues of A: the eigenvalues of companion(A), greedily
/// matched into conjugate pairs within tol * scale, one representative with
/// Im >= 0 per pair.  Sorted by descending modulus, then descending Re.
///
/// Real-axis eigenvalues (|Im| < tol * scale) are paired among themselves;
/// a leftover without a partner raises PairingError.
inline std::vector<Complex> standard_eigenvalues(const QMatrix& m,
                                                 double tol = 1e-8,
                                                 double qr_tol = 1e-12,
                                                 std::size_t max_iter = 0) {
  require_square(m, "standard_eigenvalues");
  const std::vector<Complex> ev = eigenvalues(companion(m), qr_tol, max_iter);

  double scale = 1.0;
  for (Complex v : ev) scale = std::max(scale, std::abs(v));
  const double tau = tol * scale;

  std::vector<Complex> upper, lower;
  std::vector<double> reals;
  for (Complex v : ev) {
    if (std::abs(v.imag()) <= tau)
      reals.push_back(v.real());
    else if (v.imag() > 0.0)
      upper.push_back(v);
    else
      lower.push_back(v);
  }

  if (reals.size() % 2 != 0 || upper.size() != lower.size())
    throw PairingError("standard_eigenvalues: unpairable spectrum");

  std::vector<Complex> out;
  out.reserve(m.rows);

  // Real eigenvalues of the companion come in equal pairs; adjacent after
  // sorting.
  std::sort(reals.begin(), reals.end());
  for (std::size_t i = 0; i + 1 < reals.size(); i += 2) {
    if (std::abs(reals[i + 1] - reals[i]) > 2.0 * tau)
      throw PairingError("standard_eigenvalues: real eigenvalues unpaired");
    out.emplace_back(0.5 * (reals[i] + reals[i + 1]), 0.0);
  }

  // Greedy nearest-neighbor matching between half-planes.
  std::vector<bool> used(lower.size(), false);
  std::sort(upper.begin(), upper.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a.real() > b.real();
  });
  for (Complex u : upper) {
    std::size_t best = lower.size();
    double bestd = 0.0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(std::conj(lower[i]) - u);
      if (best == lower.size() || d < bestd) {
        best = i;
        bestd = d;
      }
    }
    if (best == lower.size() || bestd > 2.0 * tau)
      throw PairingError("standard_eigenvalues: no conjugate partner");
    used[best] = true;
    Complex rep = 0.5 * (u + std::conj(lower[best]));
    if (rep.imag() < 0.0) rep = std::conj(rep);
    out.push_back(rep);
  }

  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a.real() > b.real();
  });
  return out;
}

/// Second-order trace directly from the entries:
///   sum_l |a_ll|^2 + 4 sum_{l<m} Re(a_ll) Re(a_mm)
///                  - 2 sum_{l<m} Re(a_ml a_lm).
inline double trace2_entrywise(const QMatrix& m) {
  require_square(m, "trace2_entrywise");
  const std::size_t n = m.rows;
  double diag_sq = 0.0, diag_cross = 0.0, offdiag = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    diag_sq += norm_sq(m(l, l));
    for (std::size_t k = l + 1; k < n; ++k) {
      diag_cross += re(m(l, l)) * re(m(k, k));
      offdiag += re(m(k, l) * m(l, k));
    }
  }
  return diag_sq + 4.0 * diag_cross - 2.0 * offdiag;
}

/// det_H(I -+ zA) expanded from the standard eigenvalues:
/// prod_k (1 -+ 2 Re(l_k) z + |l_k|^2 z^2).  Real coefficients.
inline Polynomial det_poly_from_standard_eigenvalues(
    const std::vector<Complex>& eigs, DetSign sign = DetSign::minus_zA) {
  const double s = (sign == DetSign::minus_zA) ? -1.0 : 1.0;
  Polynomial p{{1.0}};
  for (Complex l : eigs) {
    Polynomial f{{1.0, s * 2.0 * l.real(), std::norm(l)}};
    p = poly_mul(p, f);
  }
  return p;
}

/// Everything the identity checks need, in one bundle.
struct InvariantReport {
  double t1 = 0.0;
  double t2 = 0.0;
  std::vector<double> tk;            ///< T_0..T_2n
  std::vector<double> det_poly;      ///< det_H(I - zA) coefficients, ascending
  std::vector<Complex> eigenvalues;  ///< standard eigenvalues, Im >= 0
  std::map<std::string, double> residuals;
  double tol = 0.0;

  bool all_ok() const {
    for (const auto& [k, v] : residuals)
      if (!(v < tol)) return false;
    return true;
  }
};

/// Runs the eigenvalue identity checks on A and reports residuals:
///   r1: |T_1 - 2 Re sum l_k|
///   r2: |T_2 - (sum |l_k|^2 + 4 sum_{k<m} Re l_k Re l_m)|
///   r3: max coefficient deviation of det_H(I - zA) from the product form
///   r4: |entrywise T_2 - T_2|
inline InvariantReport verify_identities(const QMatrix& m, double tol = 1e-10) {
  require_square(m, "verify_identities");
  const std::size_t n = m.rows;

  InvariantReport rep;
  rep.tol = tol;
  rep.tk = traces_all(m, 2 * n);
  rep.t1 = rep.tk.size() > 1 ? rep.tk[1] : 0.0;
  rep.t2 = rep.tk.size() > 2 ? rep.tk[2] : 0.0;
  rep.eigenvalues = standard_eigenvalues(m);

  const Polynomial dp = fredholm_poly(m, DetSign::minus_zA);
  rep.det_poly.resize(dp.coeffs.size());
  for (std::size_t k = 0; k < dp.coeffs.size(); ++k)
    rep.det_poly[k] = dp.coeffs[k].real();

  double re_sum = 0.0, abs2_sum = 0.0, cross = 0.0;
  for (std::size_t k = 0; k < rep.eigenvalues.size(); ++k) {
    re_sum += rep.eigenvalues[k].real();
    abs2_sum += std::norm(rep.eigenvalues[k]);
    for (std::size_t l = k + 1; l < rep.eigenvalues.size(); ++l)
      cross += rep.eigenvalues[k].real() * rep.eigenvalues[l].real();
  }

  rep.residuals["r1"] = std::abs(rep.t1 - 2.0 * re_sum);
  rep.residuals["r2"] = std::abs(rep.t2 - (abs2_sum + 4.0 * cross));

  const Polynomial prod =
      det_poly_from_standard_eigenvalues(rep.eigenvalues, DetSign::minus_zA);
  double r3 = 0.0;
  const std::size_t deg = std::max(dp.coeffs.size(), prod.coeffs.size());
  for (std::size_t k = 0; k < deg; ++k) {
    const Complex a = k < dp.coeffs.size() ? dp.coeffs[k] : 0.0;
    const Complex b = k < prod.coeffs.size() ? prod.coeffs[k] : 0.0;
    r3 = std::max(r3, std::abs(a - b));
  }
  rep.residuals["r3"] = r3;
  rep.residuals["r4"] = std::abs(trace2_entrywise(m) - rep.t2);
  return rep;
}

}  // namespace quatspec
