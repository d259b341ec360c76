#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdext {

/// Capacity and depth bounds. These are configuration, passed to the
/// operations that can blow up; the defaults keep every oracle desk-scale.
struct Limits {
  int max_depth = 32;               ///< longest cylinder word produced by normalization
  int max_atoms = 16;               ///< finite Boolean algebras
  std::size_t max_elements = 1u << 16;
  int max_catalog_punctures = 4;    ///< enumerate_catalog refuses larger worlds
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured capacity bound was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An input outside the operation's domain (a puncture where an X-point is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An internal consistency check failed. Never expected on valid inputs.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace zdext
