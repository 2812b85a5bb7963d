#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace halfcomm {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (wrong presentation, bad index, dimension mismatch).
class UsageError : public Error {
public:
  using Error::Error;
};

/// A computation would exceed a configured cap (degree, closure size, table size).
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Malformed expression or label text. Carries the byte offset of the failure.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace halfcomm
