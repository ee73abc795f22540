#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "quatspec/errors.hpp"

namespace quatspec {

/// Finite-sample upper envelope of the order of an entire function from its
/// power-series coefficients:
///   max over n in [n_min, len) of n log n / log(1 / |a_n|),
/// skipping zero coefficients.  A coefficient with |a_n| >= 1 makes the
/// envelope infinite (no decay at all at that index).  Throws
/// AllCoefficientsZeroError when the window holds no nonzero coefficient.
inline double order_estimate(const std::vector<double>& coeffs,
                             std::size_t n_min) {
  if (n_min < 2) throw KOutOfRangeError("order_estimate: n_min >= 2 required");
  double best = -1.0;
  bool any = false;
  for (std::size_t n = n_min; n < coeffs.size(); ++n) {
    const double a = std::abs(coeffs[n]);
    if (a == 0.0) continue;
    any = true;
    if (a >= 1.0) return std::numeric_limits<double>::infinity();
    const double est = static_cast<double>(n) * std::log(static_cast<double>(n)) /
                       std::log(1.0 / a);
    best = std::max(best, est);
  }
  if (!any)
    throw AllCoefficientsZeroError(
        "order_estimate: no nonzero coefficient in window");
  return best;
}

/// Checks the decay law |a_n| <= C n^(-n/q): true iff s_n = |a_n| n^(n/q)
/// shows no blow-up trend.  Evaluated in the log domain; the test is a
/// monotone-tail test over the last half of the nonzero-coefficient window:
/// a weakly increasing tail that ends above where it started counts as
/// blow-up.  Throws EmptyWindowError when fewer than two tail points exist.
inline bool coefficient_decay_check(const std::vector<double>& coeffs,
                                    double p, double q) {
  if (!(p > 0.0 && q > p))
    throw InvalidExponentError("coefficient_decay_check: need q > p > 0");

  std::vector<double> log_s;
  for (std::size_t n = 1; n < coeffs.size(); ++n) {
    const double a = std::abs(coeffs[n]);
    if (a == 0.0) continue;
    log_s.push_back(std::log(a) +
                    (static_cast<double>(n) / q) * std::log(static_cast<double>(n)));
  }
  const std::size_t tail_begin = log_s.size() / 2;
  if (log_s.size() - tail_begin < 2)
    throw EmptyWindowError("coefficient_decay_check: empty tail window");

  bool nondecreasing = true;
  for (std::size_t i = tail_begin + 1; i < log_s.size(); ++i)
    if (log_s[i] < log_s[i - 1]) {
      nondecreasing = false;
      break;
    }
  const bool rose = log_s.back() > log_s[tail_begin];
  return !(nondecreasing && rose);
}

}  // namespace quatspec
