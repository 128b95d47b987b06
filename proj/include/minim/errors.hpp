#ifndef MINIM_ERRORS_HPP
#define MINIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minim {

// Invalid parameter or out-of-range argument.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A function produced a non-finite value during a scan; carries the abscissa.
struct EvaluationError : std::runtime_error {
  double where;
  EvaluationError(const std::string& msg, double x)
      : std::runtime_error(msg + " at x = " + std::to_string(x)), where(x) {}
};

// Matrix is numerically nonsingular at the requested tolerance.
struct NoNullSpaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series truncation insufficient for the requested evaluation point.
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver found no admissible root.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver found more than one admissible root.
struct AmbiguityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation not defined for this density kind (profile vs shell).
struct UnsupportedKindError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter pair explicitly excluded from a catalog family.
struct ExcludedCaseError : DomainError {
  using DomainError::DomainError;
};

// Gradient descent could not make progress.
struct DescentStalledError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace minim

#endif  // MINIM_ERRORS_HPP
