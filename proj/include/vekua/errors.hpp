#pragma once

#include <stdexcept>
#include <string>

namespace vekua {

  // Base of every error raised by the library.
  class Error : public std::runtime_error {
    public:
      using std::runtime_error::runtime_error;
  };

  // Field/sample sizes that do not match their grid.
  class ShapeError : public Error {
    public:
      using Error::Error;
  };

  // Argument outside the documented domain (index out of range, bad family parameters, ...).
  class DomainError : public Error {
    public:
      using Error::Error;
  };

  // Generating pair with Im(conj(F) G) == 0 somewhere.
  class DegeneratePairError : public Error {
    public:
      using Error::Error;
  };

  // Input that fails a hard numerical precondition (compatibility, kernel membership, noise).
  class PreconditionError : public Error {
    public:
      using Error::Error;
  };

  // Picard iteration (or any iterative solve) that did not reach its tolerance.
  class ConvergenceError : public Error {
    public:
      using Error::Error;
  };

  // Least-squares basis without full column rank.
  class RankDeficiencyError : public Error {
    public:
      using Error::Error;
  };

  // Malformed configuration or file contents.
  class ConfigError : public Error {
    public:
      using Error::Error;
  };

} // namespace vekua
