#pragma once

#include <stdexcept>
#include <string>

namespace spiralis {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Constructor argument violates a family/parameter constraint.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Requested parameter domain is unusable (empty, negative, or starts on a
/// non-integrable singularity).
class InvalidDomain : public Error {
 public:
  using Error::Error;
};

/// Evaluation point lies outside the curve's parameter domain.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Function argument outside the supported branch (e.g. z > 0 for 2F1 here).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Series or adaptive scheme hit its iteration cap before meeting tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Integration interval with lo > hi.
class InvalidInterval : public Error {
 public:
  using Error::Error;
};

/// Integrand returned NaN/inf at a quadrature node.
class NonFiniteEvaluation : public Error {
 public:
  using Error::Error;
};

/// Too few samples for the requested diagnostic.
class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

/// Radius of curvature is constant or non-monotone on the analyzed stretch,
/// so the logarithmic curvature graph does not exist there.
class DegenerateRho : public Error {
 public:
  using Error::Error;
};

/// Line fit requested on points with no abscissa spread.
class DegenerateAbscissa : public Error {
 public:
  using Error::Error;
};

/// Transition problem has no solution for the given family and budget.
class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace spiralis
