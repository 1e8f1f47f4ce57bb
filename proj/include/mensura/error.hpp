#pragma once

#include <stdexcept>
#include <string>

namespace mensura {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sum of two surds whose radicands differ; the caller has to fall back to
/// ApproxScalar arithmetic.
class IncompatibleRadicands : public Error {
 public:
  using Error::Error;
};

class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

class NotPythagorean : public Error {
 public:
  using Error::Error;
};

/// A figure whose lengths violate a triangle inequality, the quadrilateral
/// closure condition, positivity, or another shape invariant.
class InvalidFigure : public Error {
 public:
  using Error::Error;
};

class InvalidTriangle : public InvalidFigure {
 public:
  using InvalidFigure::InvalidFigure;
};

class DegenerateRhombus : public InvalidFigure {
 public:
  using InvalidFigure::InvalidFigure;
};

class DegenerateCollinear : public Error {
 public:
  using Error::Error;
};

}  // namespace mensura
