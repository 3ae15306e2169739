#ifndef CONEDIRAC_ERRORS_HPP
#define CONEDIRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conedirac {

// Evaluation hit a pole of a special function (gamma at a non-positive
// integer, hypergeometric with non-positive integer c, ...).
class PoleError : public std::runtime_error {
public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// A series or iteration failed to reach its termination criterion.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// An ODE integration or root refinement could not continue.
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Two eigenvalue branches collided inside the dedup radius.  The spectrum
// of each fiber operator is simple, so this signals a solver defect rather
// than a feature of the problem.
class SimplicityError : public std::runtime_error {
public:
  explicit SimplicityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace conedirac

#endif
