#pragma once

#include <stdexcept>
#include <string>

namespace bandwidth {

// Process exit codes, shared between the error taxonomy and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitHypothesisViolated = 2,
  kExitTheoremViolated = 3,
  kExitUsage = 64,
  kExitConfig = 65,
  kExitInternal = 70,
};

/// Bad configuration: malformed JSON, unknown keys, invalid parameter ranges.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation point outside the object's interval of validity.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A construction whose geometric precondition fails (e.g. a strict potential
/// on a band that is not wide enough).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested mode cannot apply to the given data (e.g. sup-trace with
/// a non-positive eta at the upper boundary).
class ModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Potential fails the admissibility requirement (zero plateau constant).
class AdmissibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A derivative was requested for a custom warp that carries none and has
/// finite differencing disabled.
class DerivativeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two algebraic routes to the same quantity disagree beyond tolerance.
/// Always a bug in this code base, never a property of the input.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver failed to converge within its iteration cap.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bandwidth
