#pragma once

#include <cstdint>
#include <cstddef>

#include "quatspec/qmatrix.hpp"
#include "quatspec/quaternion.hpp"

namespace quatspec {

/// Counter-based splittable generator in the SplitMix64 family.  A stream is
/// addressed by (seed, stream index); each draw advances a 64-bit counter by
/// a stream-specific odd gamma and hashes it, so independent streams can be
/// consumed concurrently with reproducible results.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0) {
    state_ = mix(seed + kGolden * stream);
    gamma_ = mix(state_ ^ 0x5851F42D4C957F2Dull) | 1ull;
  }

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    state_ += gamma_;
    return mix(state_);
  }

  /// Uniform on [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on [-1, 1].
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  Quaternion next_quaternion() {
    const double w = next_symmetric();
    const double x = next_symmetric();
    const double y = next_symmetric();
    const double z = next_symmetric();
    return {w, x, y, z};
  }

 private:
  std::uint64_t state_ = 0;
  std::uint64_t gamma_ = 0;
};

inline QVector sample_qvector(SplitMix64& g, std::size_t dim) {
  QVector v(dim);
  for (Quaternion& q : v) q = g.next_quaternion();
  return v;
}

/// Random quaternion matrix, components i.i.d. uniform on [-1, 1]; with
/// `normalize` the entries are scaled by 1/(2n) to keep the spectrum within
/// the unit ball.
inline QMatrix sample_qmatrix(SplitMix64& g, std::size_t n,
                              bool normalize = false) {
  QMatrix m(n, n);
  for (Quaternion& q : m.a) q = g.next_quaternion();
  if (normalize && n > 0) m = (1.0 / (2.0 * static_cast<double>(n))) * m;
  return m;
}

}  // namespace quatspec
