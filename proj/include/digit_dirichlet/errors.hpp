#ifndef DIGIT_DIRICHLET_ERRORS_HPP
#define DIGIT_DIRICHLET_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace digit_dirichlet {

using Complex = std::complex<double>;

/// Base class for every failure the library can report. The CLI maps
/// subclasses onto its exit codes (2 for usage, 3 for numeric failures).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violated a precondition (bad base, negative index, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The requested point lies outside the region an evaluator supports.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Evaluation was requested at (or too close to) a pole of the function.
class PoleAt : public Error {
 public:
  PoleAt(Complex location, const std::string& what)
      : Error(what), location_(location) {}
  Complex location() const { return location_; }

 private:
  Complex location_;
};

/// An iterative scheme hit its refinement limit before meeting tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A sum that must be real by conjugate symmetry came back with an
/// imaginary residue above the allowed cancellation noise.
class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

/// A cached S_beta table does not reach far enough for a required node.
class TableTooShort : public Error {
 public:
  using Error::Error;
};

}  // namespace digit_dirichlet

#endif
