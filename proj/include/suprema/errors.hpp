#ifndef SUPREMA_ERRORS_HPP
#define SUPREMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace suprema {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a precondition: alphabet mismatch, carrier
/// violation, unknown symbol, malformed file content.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A requested operator or solver cannot be built with the given parameters.
class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

/// A construction exceeded the global state budget.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a bug.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace suprema

#endif  // SUPREMA_ERRORS_HPP
