#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "quatspec/cmatrix.hpp"
#include "quatspec/polynomial.hpp"

namespace quatspec {

namespace exact {

using Rational = boost::multiprecision::cpp_rational;

/// Complex number with exact rational components.
struct CRat {
  Rational re;
  Rational im;

  friend CRat operator+(const CRat& a, const CRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CRat operator-(const CRat& a, const CRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
};

using RatPoly = std::vector<CRat>;  // ascending degree

inline RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  RatPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

inline void rp_add_to(RatPoly& a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
}

inline CRat from_double(Complex z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw NonRepresentableEntryError(std::string(who) +
                                     ": non-finite entry");
  return {Rational(z.real()), Rational(z.imag())};
}

}  // namespace exact

/// Exact characteristic polynomial det(Iz - M) for small matrices.
///
/// Cofactor expansion over exact rational complex arithmetic, memoized on
/// row subsets, so every finite (dyadic-rational) double entry is handled
/// without rounding.  The returned coefficients are rounded to doubles only
/// at the very end.  Limited to n <= 8.
inline Polynomial char_poly_oracle(const CMatrix& m) {
  require_square(m, "char_poly_oracle");
  const std::size_t n = m.rows;
  if (n > 8) throw TooLargeError("char_poly_oracle: n > 8");
  if (n == 0) return Polynomial{{1.0}};

  using exact::CRat;
  using exact::RatPoly;

  // entry(r, c) of Iz - M as a degree <= 1 exact polynomial
  std::vector<RatPoly> entry(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      RatPoly p(2);
      p[0] = -exact::from_double(m(r, c), "char_poly_oracle");
      if (r == c) p[1] = CRat{exact::Rational(1), exact::Rational(0)};
      while (p.size() > 1 && p.back().re == 0 && p.back().im == 0)
        p.pop_back();
      entry[r * n + c] = std::move(p);
    }

  // sub[mask] = det of the submatrix with rows in `mask` and the trailing
  // popcount(mask) columns; expand along the first of those columns.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<RatPoly> sub(full + 1);
  sub[0] = RatPoly{CRat{exact::Rational(1), exact::Rational(0)}};
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t col = n - static_cast<std::size_t>(__builtin_popcountll(mask));
    RatPoly acc{CRat{}};
    int pos = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(mask & (std::size_t{1} << r))) continue;
      const RatPoly& e = entry[r * n + col];
      const bool zero = e.size() == 1 && e[0].re == 0 && e[0].im == 0;
      if (!zero) {
        RatPoly term = exact::rp_mul(e, sub[mask & ~(std::size_t{1} << r)]);
        if (pos % 2 == 1)
          for (CRat& t : term) t = -t;
        exact::rp_add_to(acc, term);
      }
      ++pos;
    }
    sub[mask] = std::move(acc);
  }

  const RatPoly& p = sub[full];
  Polynomial out;
  out.coeffs.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex c = 0.0;
    if (k < p.size())
      c = Complex(p[k].re.convert_to<double>(), p[k].im.convert_to<double>());
    out.coeffs[k] = c;
  }
  return out;
}

/// Exact determinant (rounded to double on return): (-1)^n times the
/// constant coefficient of char_poly_oracle.
inline Complex det_oracle(const CMatrix& m) {
  const Polynomial p = char_poly_oracle(m);
  const Complex c0 = p.coeffs.front();
  return (m.rows % 2 == 0) ? c0 : -c0;
}

}  // namespace quatspec
