#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs a nonzero argument received zero.
class ZeroInput : public Error {
 public:
  using Error::Error;
};

/// The pair (f1, f2) has all four pseudo-Jacobians j_k equal to zero.
class DependentInputs : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariant of its type (determinant, nonzero scalar, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its own post-construction check.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A quadruple does not define an automorphism of the quadric.
class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

/// Something that the theory rules out happened anyway.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position, std::vector<std::string> expected)
      : Error(message + " at position " + std::to_string(position)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace quadric
