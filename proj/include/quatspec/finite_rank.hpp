#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "quatspec/invariants.hpp"
#include "quatspec/qmatrix.hpp"
#include "quatspec/quaternion.hpp"
#include "quatspec/schatten.hpp"

namespace quatspec {

/// Rank-n tensor sum_k xs[k] (x) xps[k] over H^dim; the functionals act via
/// the canonical pairing, so the operator is v |-> sum_k xs[k] <xps[k], v>,
/// which is right-linear.
struct FiniteRankOp {
  std::size_t dim = 0;
  std::vector<QVector> xs;
  std::vector<QVector> xps;

  std::size_t rank() const { return xs.size(); }

  /// Operator action v |-> sum_k xs[k] <xps[k], v>.
  QVector apply(const QVector& v) const {
    if (v.size() != dim) throw ShapeMismatchError("apply: vector dim");
    QVector out(dim);
    for (std::size_t k = 0; k < rank(); ++k) {
      const Quaternion c = inner(xps[k], v);
      for (std::size_t l = 0; l < dim; ++l) out[l] += xs[k][l] * c;
    }
    return out;
  }
};

inline void validate(const FiniteRankOp& f, const char* who) {
  if (f.xs.size() != f.xps.size())
    throw ShapeMismatchError(std::string(who) + ": rank mismatch");
  for (const QVector& v : f.xs)
    if (v.size() != f.dim) throw ShapeMismatchError(std::string(who) + ": dim");
  for (const QVector& v : f.xps)
    if (v.size() != f.dim) throw ShapeMismatchError(std::string(who) + ": dim");
}

/// Pairing matrix G(k, m) = <xps[k], xs[m]>, the matrix of the operator.
inline QMatrix gram(const FiniteRankOp& f) {
  return gram_from_rank_one_sum(f.xs, f.xps);
}

/// First-order trace of the k-th power, evaluated through the operator
/// action: T_1(F^k) = 2 sum_m Re <xps[m], F^(k-1) xs[m]>, which unrolls to
/// the chained sum over <x'_{m1}, x_{m2}> ... <x'_{mk}, x_{m1}>.
inline double t1_power(const FiniteRankOp& f, std::size_t k) {
  if (k == 0) return 2.0 * static_cast<double>(f.dim);
  double acc = 0.0;
  for (std::size_t m = 0; m < f.rank(); ++m) {
    QVector v = f.xs[m];
    for (std::size_t step = 1; step < k; ++step) v = f.apply(v);
    acc += re(inner(f.xps[m], v));
  }
  return 2.0 * acc;
}

/// Composition F o G (apply G first): sum_k F(G.xs[k]) (x) G.xps[k].
/// Rank is bounded by rank(G).
inline FiniteRankOp compose(const FiniteRankOp& f, const FiniteRankOp& g) {
  if (f.dim != g.dim) throw ShapeMismatchError("compose: dims differ");
  FiniteRankOp out;
  out.dim = f.dim;
  out.xs.reserve(g.rank());
  for (const QVector& x : g.xs) out.xs.push_back(f.apply(x));
  out.xps = g.xps;
  return out;
}

/// det_H(I - zF) through the exponential power-sum representation
///   exp(-sum_m T_1(F^m) z^m / m),
/// truncated once the term magnitude drops below 1e-16.  Requires
/// |z| * (largest singular value of the pairing matrix) < 1, the convergence
/// disk of the series; otherwise OutsideConvergenceDiskError.
///
/// The value is complex for complex z (the polynomial has real coefficients,
/// so real z gives a real value).
inline Complex exp_sum_det(const FiniteRankOp& f, Complex z,
                           std::size_t m_max = 64) {
  const QMatrix g = gram(f);
  const std::vector<double> sv = singular_values(g);
  const double rho_bound = sv.empty() ? 0.0 : sv.front();
  if (!(std::abs(z) * rho_bound < 1.0))
    throw OutsideConvergenceDiskError(
        "exp_sum_det: |z| * spectral radius bound >= 1");

  Complex sum = 0.0;
  Complex zm = 1.0;
  for (std::size_t m = 1; m <= m_max; ++m) {
    zm *= z;
    const Complex term = t1_power(f, m) * zm / static_cast<double>(m);
    sum += term;
    if (std::abs(term) < 1e-16) break;
  }
  return std::exp(-sum);
}

}  // namespace quatspec
