#pragma once

#include <stdexcept>
#include <string>

namespace bathlab {

// Base for every numerical failure the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of subdivisions above tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

class InvalidBracket : public Error {
 public:
  using Error::Error;
};

// Special function evaluated at a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// A secular-equation interval did not show the expected sign change.
class RootNotBracketed : public Error {
 public:
  using Error::Error;
};

}  // namespace bathlab
