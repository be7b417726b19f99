#ifndef HOPFLUID_ERRORS_HPP
#define HOPFLUID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfluid {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point lies on (or within tolerance of) a degenerate locus of the chart metric.
struct SingularPointError : Error {
  using Error::Error;
};

struct OutOfDomainError : Error {
  using Error::Error;
};

// Finite-difference stencil would leave the chart box.
struct StepTooLargeError : Error {
  using Error::Error;
};

// Strain tensor has rank < 2 at the evaluation point.
struct RankDeficientError : Error {
  using Error::Error;
};

struct QuadratureDivergenceError : Error {
  using Error::Error;
};

// Profile endpoints not in {0, pi} within tolerance.
struct InadmissibleProfileError : Error {
  using Error::Error;
};

struct ZeroChargeError : Error {
  using Error::Error;
};

struct NoAdmissibleScaleError : Error {
  using Error::Error;
};

struct NonMonotoneProfileError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace hopfluid

#endif
