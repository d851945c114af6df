#ifndef AFFCRYST_ERRORS_HPP
#define AFFCRYST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace affcryst {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input document or unparsable scalar text.
struct ParseError : Error {
  using Error::Error;
};

/// A domain invariant failed (Jacobi identity, homomorphism identity,
/// a precondition such as unipotence or nonsingularity, ...).
struct InvariantError : Error {
  using Error::Error;
};

/// A condition that valid inputs cannot trigger. Indicates a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace affcryst

#endif
