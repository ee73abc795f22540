#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "quatspec/cmatrix.hpp"

namespace quatspec {

/// Polynomial with complex coefficients in ascending degree order.
struct Polynomial {
  std::vector<Complex> coeffs;  ///< coeffs[k] multiplies z^k

  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> c) : coeffs(std::move(c)) {}

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  /// Horner evaluation.
  Complex eval(Complex z) const {
    Complex v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
    return v;
  }

  /// Drops exactly-zero leading coefficients (keeps at least one).
  Polynomial& trim() {
    while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
    return *this;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return Polynomial{};
  Polynomial c;
  c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return c;
}

/// Monic polynomial prod_k (z - roots[k]), expanded by convolution.
inline Polynomial poly_from_roots(const std::vector<Complex>& roots) {
  Polynomial p{{1.0}};
  for (Complex r : roots) {
    Polynomial f{{-r, 1.0}};
    p = poly_mul(p, f);
  }
  return p;
}

}  // namespace quatspec
