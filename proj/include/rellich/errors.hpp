#pragma once

#include <stdexcept>
#include <string>

namespace rellich {

/// Bad argument or violated precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when h + lambda <= 0, i.e. the mode quotient has no denominator.
/// Only reachable at alpha = 4 - n with lambda = 0; callers route to
/// critical_constant instead.
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two resolutions of a numerical computation disagree beyond tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double coarse, double fine)
      : std::runtime_error(what), coarse_(coarse), fine_(fine) {}

  double coarse() const noexcept { return coarse_; }
  double fine() const noexcept { return fine_; }

 private:
  double coarse_;
  double fine_;
};

/// Eigen-solver breakdown (indefinite metric, no convergence, ...).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rellich
