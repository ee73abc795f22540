#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "quatspec/charpoly.hpp"
#include "quatspec/invariants.hpp"
#include "quatspec/qmatrix.hpp"
#include "quatspec/schatten.hpp"

namespace quatspec {

/// Generator description of an infinite quaternionic operator, realized via
/// finite truncations.
///
/// diagonal: T = diag of complex standard eigenvalues lambda(1), lambda(2)...
/// kernel:   T = { mu(m) * d(m, n) * nu(n) } with |d| <= bound.
/// Indices are 1-based.
struct TraceClassModel {
  enum class Kind { diagonal, kernel };

  Kind kind = Kind::diagonal;
  std::function<Complex(std::size_t)> lambda;
  std::function<double(std::size_t)> mu;
  std::function<double(std::size_t)> nu;
  std::function<Quaternion(std::size_t, std::size_t)> d;
  double bound = 1.0;  ///< M with |d(m,n)| <= M
  double p = 1.0;      ///< declared summability exponent

  static TraceClassModel diagonal(std::function<Complex(std::size_t)> l,
                                  double p_ = 1.0) {
    TraceClassModel m;
    m.kind = Kind::diagonal;
    m.lambda = std::move(l);
    m.p = p_;
    return m;
  }

  static TraceClassModel kernel(std::function<double(std::size_t)> mu_,
                                std::function<double(std::size_t)> nu_,
                                std::function<Quaternion(std::size_t,
                                                         std::size_t)> d_,
                                double bound_, double p_) {
    TraceClassModel m;
    m.kind = Kind::kernel;
    m.mu = std::move(mu_);
    m.nu = std::move(nu_);
    m.d = std::move(d_);
    m.bound = bound_;
    m.p = p_;
    return m;
  }
};

/// N x N truncation of the model as a quaternion matrix.  Kernel entries are
/// checked against the declared bound while the window is built.
inline QMatrix truncate(const TraceClassModel& model, std::size_t n) {
  QMatrix t(n, n);
  if (model.kind == TraceClassModel::Kind::diagonal) {
    for (std::size_t k = 0; k < n; ++k) t(k, k) = Quaternion(model.lambda(k + 1));
  } else {
    for (std::size_t m = 0; m < n; ++m) {
      const double mu = model.mu(m + 1);
      for (std::size_t l = 0; l < n; ++l) {
        const Quaternion d = model.d(m + 1, l + 1);
        if (abs(d) > model.bound * (1.0 + 1e-12))
          throw Error("truncate: kernel entry exceeds the declared bound");
        t(m, l) = mu * d * model.nu(l + 1);
      }
    }
  }
  return t;
}

/// Empirical window check of the declared summability: the p-th power
/// partial sums over the second half of the window must not exceed those of
/// the first half.  A decay heuristic, not a proof of membership in l^p.
inline bool declared_summability_ok(const TraceClassModel& model,
                                    std::size_t n) {
  auto halves_flatten = [n](auto&& seq, double p) {
    double first = 0.0, second = 0.0;
    for (std::size_t k = 1; k <= n / 2; ++k)
      first += std::pow(std::abs(seq(k)), p);
    for (std::size_t k = n / 2 + 1; k <= n; ++k)
      second += std::pow(std::abs(seq(k)), p);
    return second == 0.0 || second < first;
  };
  if (model.kind == TraceClassModel::Kind::diagonal)
    return halves_flatten([&](std::size_t k) { return std::abs(model.lambda(k)); },
                          model.p);
  return halves_flatten(model.mu, model.p) && halves_flatten(model.nu, model.p);
}

struct ConvergenceTable {
  struct Row {
    std::size_t n = 0;
    Complex value;
    double abs_delta = 0.0;
  };
  std::vector<Row> rows;
};

/// Truncation limit did not reach the requested tolerance; the partial table
/// is attached for inspection.
struct NotConvergedError : Error {
  ConvergenceTable table;

  NotConvergedError(const std::string& what, ConvergenceTable t)
      : Error(what), table(std::move(t)) {}
};

struct DetLimit {
  Complex value;
  ConvergenceTable table;
  /// For diagonal models: the product form over the final truncation window.
  std::optional<Complex> closed_form;
};

namespace detail {

inline Complex det_h_plus_z(const TraceClassModel& model, std::size_t n,
                            Complex z) {
  if (model.kind == TraceClassModel::Kind::diagonal) {
    Complex v = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
      const Complex l = model.lambda(k);
      v *= 1.0 + 2.0 * l.real() * z + std::norm(l) * z * z;
    }
    return v;
  }
  const CMatrix chi = companion(truncate(model, n));
  CMatrix m = CMatrix::identity(chi.rows);
  for (std::size_t i = 0; i < chi.a.size(); ++i) m.a[i] += z * chi.a[i];
  return det(m);
}

}  // namespace detail

/// det_H(I + z T_N) over the dyadic truncation schedule N = 2, 4, 8, ...,
/// n_max, stopping once |v_N - v_{N/2}| < tol (the empty truncation counts
/// as 1, so a zero model stops at the first row).  Kernel models must
/// declare p <= 1.  Throws NotConvergedError with the table attached when
/// n_max is reached without meeting tol.
inline DetLimit fredholm_det_limit(const TraceClassModel& model, Complex z,
                                   double tol = 1e-10,
                                   std::size_t n_max = 4096) {
  if (model.kind == TraceClassModel::Kind::kernel && !(model.p <= 1.0))
    throw InvalidExponentError(
        "fredholm_det_limit: kernel model must declare p <= 1");

  DetLimit out;
  Complex prev = 1.0;
  for (std::size_t n = 2; n <= n_max; n *= 2) {
    const Complex v = detail::det_h_plus_z(model, n, z);
    const double delta = std::abs(v - prev);
    out.table.rows.push_back({n, v, delta});
    prev = v;
    if (delta < tol) {
      out.value = v;
      if (model.kind == TraceClassModel::Kind::diagonal)
        out.closed_form = detail::det_h_plus_z(model, n, z);
      return out;
    }
  }
  throw NotConvergedError("fredholm_det_limit: no convergence by n_max",
                          std::move(out.table));
}

struct ComposeBound {
  double norm_r = 0.0;  ///< Schatten-r norm of the truncation
  double bound = 0.0;   ///< M * |mu|_p * |nu|_q over the window
  double r = 0.0;       ///< 1/r = 1/p + 1/q - 1/2
};

/// Builds the N x N truncation of a kernel model and compares its
/// Schatten-r norm against the M-inclusive product bound, where the
/// sequence norms are taken over the same window.
inline ComposeBound compose_schatten_bound(const TraceClassModel& model,
                                           std::size_t n, double p, double q) {
  if (model.kind != TraceClassModel::Kind::kernel)
    throw Error("compose_schatten_bound: kernel model required");
  if (!(p > 0.0 && p <= 2.0 && q > 0.0 && q <= 2.0))
    throw InvalidExponentError("compose_schatten_bound: need 0 < p, q <= 2");
  if (n < 1) throw KOutOfRangeError("compose_schatten_bound: N >= 1");

  ComposeBound out;
  out.r = 1.0 / (1.0 / p + 1.0 / q - 0.5);
  out.norm_r = schatten_norm(truncate(model, n), out.r);

  double mu_p = 0.0, nu_q = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    mu_p += std::pow(std::abs(model.mu(k)), p);
    nu_q += std::pow(std::abs(model.nu(k)), q);
  }
  out.bound = model.bound * std::pow(mu_p, 1.0 / p) * std::pow(nu_q, 1.0 / q);
  return out;
}

/// Coefficients of det_H(I + zT_N) up to degree `deg`, built from the
/// standard eigenvalues of the truncation so that very small coefficients
/// keep relative accuracy (the multiplicative route has no cancellation
/// blow-up, unlike the Newton recurrence at large k).
inline std::vector<double> det_poly_coeffs(const TraceClassModel& model,
                                           std::size_t n, std::size_t deg) {
  std::vector<Complex> eigs;
  if (model.kind == TraceClassModel::Kind::diagonal) {
    eigs.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) eigs.push_back(model.lambda(k));
  } else {
    eigs = standard_eigenvalues(truncate(model, n));
  }
  const Polynomial p = det_poly_from_standard_eigenvalues(eigs, DetSign::plus_zA);
  std::vector<double> out(deg + 1, 0.0);
  for (std::size_t k = 0; k <= deg && k < p.coeffs.size(); ++k)
    out[k] = p.coeffs[k].real();
  return out;
}

}  // namespace quatspec
