#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fkext {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 input. `offset` is the index of the offending byte.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Result would exceed the 64-vertex representation.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Distance-based quantity requested on a disconnected graph.
class DisconnectedError : public Error {
public:
  using Error::Error;
};

/// Iterative solver failed to converge.
class NumericError : public Error {
public:
  NumericError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

}  // namespace fkext
