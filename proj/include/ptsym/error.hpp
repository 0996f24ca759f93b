#pragma once

#include <stdexcept>
#include <string>

namespace ptsym {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (wrong shape, not Hermitian,
/// not an involution, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An iteration did not converge or a result is too ill-conditioned to trust.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ptsym
