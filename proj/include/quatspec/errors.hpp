#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace quatspec {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
  using Error::Error;
};

struct ShapeMismatchError : Error {
  using Error::Error;
};

struct KOutOfRangeError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct NonRepresentableEntryError : Error {
  using Error::Error;
};

struct InvalidExponentError : Error {
  using Error::Error;
};

struct OutsideConvergenceDiskError : Error {
  using Error::Error;
};

struct AllCoefficientsZeroError : Error {
  using Error::Error;
};

struct EmptyWindowError : Error {
  using Error::Error;
};

/// Conjugate pairing of a companion-matrix spectrum failed; usually a sign
/// of an invalid input or an eigensolver breakdown.
struct PairingError : Error {
  using Error::Error;
};

struct NegativeEigenvalueError : Error {
  using Error::Error;
};

/// A quantity that must be real carried too large an imaginary residue.
struct ImaginaryResidueError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// QR iteration ran out of its iteration budget.  `deflated` holds the
/// eigenvalues that had already converged when the budget was exhausted.
struct NoConvergenceError : Error {
  std::vector<std::complex<double>> deflated;

  NoConvergenceError(const std::string& what,
                     std::vector<std::complex<double>> partial)
      : Error(what), deflated(std::move(partial)) {}
};

}  // namespace quatspec
