#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "quatspec/errors.hpp"

namespace quatspec {

/// Quaternion w + x*i + y*j + z*ij over doubles.
///
/// The algebra is generated by two imaginary units i and j; their product ij
/// is the third unit.  They satisfy i^2 = j^2 = (ij)^2 = -1 and j*i = -ij.
/// Values are immutable: every operation returns a new quaternion.
struct Quaternion {
  double w = 0.0;  ///< coefficient of 1
  double x = 0.0;  ///< coefficient of i
  double y = 0.0;  ///< coefficient of j
  double z = 0.0;  ///< coefficient of ij

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  /// Embeds a real number.
  constexpr explicit Quaternion(double real) : w(real) {}
  /// Embeds a complex number into the (1, i) plane.
  explicit Quaternion(std::complex<double> c) : w(c.real()), x(c.imag()) {}

  friend constexpr bool operator==(const Quaternion&,
                                   const Quaternion&) = default;

  friend constexpr Quaternion operator+(Quaternion a, Quaternion b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(Quaternion a, Quaternion b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quaternion operator-(Quaternion a) {
    return {-a.w, -a.x, -a.y, -a.z};
  }

  /// Hamilton product in the (1, i, j, ij) basis.
  friend constexpr Quaternion operator*(Quaternion a, Quaternion b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend constexpr Quaternion operator*(double r, Quaternion a) {
    return {r * a.w, r * a.x, r * a.y, r * a.z};
  }
  friend constexpr Quaternion operator*(Quaternion a, double r) {
    return r * a;
  }

  Quaternion& operator+=(Quaternion b) { return *this = *this + b; }
  Quaternion& operator-=(Quaternion b) { return *this = *this - b; }
  Quaternion& operator*=(Quaternion b) { return *this = *this * b; }
};

inline constexpr Quaternion q_one{1, 0, 0, 0};
inline constexpr Quaternion q_i{0, 1, 0, 0};
inline constexpr Quaternion q_j{0, 0, 1, 0};
inline constexpr Quaternion q_ij{0, 0, 0, 1};

constexpr Quaternion conj(Quaternion a) { return {a.w, -a.x, -a.y, -a.z}; }

constexpr double re(Quaternion a) { return a.w; }

/// Imaginary part x*i + y*j + z*ij as a quaternion.
constexpr Quaternion im(Quaternion a) { return {0.0, a.x, a.y, a.z}; }

constexpr double norm_sq(Quaternion a) {
  return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

inline double abs(Quaternion a) { return std::sqrt(norm_sq(a)); }

inline Quaternion inverse(Quaternion a) { return (1.0 / norm_sq(a)) * conj(a); }

inline bool is_finite(Quaternion a) {
  return std::isfinite(a.w) && std::isfinite(a.x) && std::isfinite(a.y) &&
         std::isfinite(a.z);
}

/// The pair (Re q, |Im q|), constant on the similarity class
/// { s^-1 q s : s != 0 }.
struct SimilarityClass {
  double re = 0.0;
  double im_norm = 0.0;  ///< always >= 0

  friend constexpr bool operator==(const SimilarityClass&,
                                   const SimilarityClass&) = default;
};

inline SimilarityClass similarity_class(Quaternion a) {
  return {a.w, std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z)};
}

/// Canonical complex representative Re(a) + i|Im(a)| of the similarity class
/// of `a`.  Always has nonnegative imaginary part.  An imaginary part below
/// 1e-14 * max(1, |a|) is snapped to exactly zero so that real values stay
/// canonical under rounding.
inline std::complex<double> standard_representative(Quaternion a) {
  const SimilarityClass c = similarity_class(a);
  double imn = c.im_norm;
  if (imn < 1e-14 * std::max(1.0, abs(a))) imn = 0.0;
  return {c.re, imn};
}

// ---------------------------------------------------------------------------
// Vectors over H with the right-module convention: matrices and operators act
// from the left, scalars multiply components from the right.

using QVector = std::vector<Quaternion>;

/// Canonical sesquilinear pairing <w, v> = sum_l conj(w_l) * v_l.
inline Quaternion inner(const QVector& w, const QVector& v) {
  if (w.size() != v.size())
    throw ShapeMismatchError("inner: vector lengths differ");
  Quaternion s{};
  for (std::size_t l = 0; l < v.size(); ++l) s += conj(w[l]) * v[l];
  return s;
}

/// v * q componentwise (right scalar action).
inline QVector right_scaled(const QVector& v, Quaternion q) {
  QVector out(v.size());
  for (std::size_t l = 0; l < v.size(); ++l) out[l] = v[l] * q;
  return out;
}

inline QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw ShapeMismatchError("QVector sizes differ");
  QVector out(a.size());
  for (std::size_t l = 0; l < a.size(); ++l) out[l] = a[l] + b[l];
  return out;
}

inline QVector basis_vector(std::size_t dim, std::size_t k) {
  QVector e(dim);
  e[k] = q_one;
  return e;
}

/// Lifts a balanced real bilinear form phi(x, x') to the two-sided H-linear
/// form Psi(x', x) = phi(x,x') - phi(xi,x')i - phi(xj,x')j - phi(x ij,x')ij,
/// whose real part recovers phi.  `phi` must be additive, balanced
/// (phi(xq, x') = phi(x, qx')) and real-bilinear; those preconditions are not
/// checked here.
template <typename Phi>
auto lift_balanced_form(Phi phi) {
  return [phi](const QVector& xp, const QVector& x) -> Quaternion {
    const double c0 = phi(x, xp);
    const double ci = phi(right_scaled(x, q_i), xp);
    const double cj = phi(right_scaled(x, q_j), xp);
    const double cij = phi(right_scaled(x, q_ij), xp);
    return {c0, -ci, -cj, -cij};
  };
}

}  // namespace quatspec
