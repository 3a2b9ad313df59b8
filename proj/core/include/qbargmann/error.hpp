#pragma once

#include <stdexcept>
#include <string>

namespace qbargmann {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where the quantity is defined
/// (q outside (0,1), z outside C_{q,m}, xi outside I_q, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncated product or series hit its term cap before meeting tolerance.
class MaxTermsExceeded : public Error {
 public:
  using Error::Error;
};

class DivergentSeries : public Error {
 public:
  using Error::Error;
};

/// A denominator Pochhammer factor vanished while the numerator did not.
class PoleInDenominator : public Error {
 public:
  using Error::Error;
};

/// Quadrature refinement did not settle within the allowed steps.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A closed form needs a ratio such as conj(w)/conj(z) with a zero operand.
class RatioUndefined : public Error {
 public:
  using Error::Error;
};

/// An identity is not literally evaluable at the requested parameters.
class SingularParameters : public Error {
 public:
  using Error::Error;
};

}  // namespace qbargmann
