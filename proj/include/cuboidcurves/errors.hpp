/**
 * @file errors.hpp
 * @brief Structured error types shared by all modules.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cuboidcurves {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A denominator factor of one of the closed-form expressions vanishes at
/// the requested parameter point. Carries the identifiers of the vanishing
/// factors so callers can report singular cells distinctly.
class SingularInput : public Error {
 public:
  SingularInput(const std::string& message, std::vector<std::string> factors)
      : Error(message), factors_(std::move(factors)) {}

  const std::vector<std::string>& factors() const { return factors_; }

 private:
  std::vector<std::string> factors_;
};

/// 1 - Q t^2 = 0 in the conic parametrization, or w + w0 = 0 when
/// recovering the parameter of a point.
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

/// Surface point with w = +/-1: the guaranteed base points of the cubic
/// curves, excluded from the alpha-lift.
class ExceptionalPoint : public Error {
 public:
  using Error::Error;
};

/// Cubic curve with P = 0 has no Mordell model.
class DegenerateCurve : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency re-check failed. This is the tripwire for
/// formula transcription or variant problems; the CLI maps it to exit
/// code 2.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cuboidcurves
