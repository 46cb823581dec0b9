#pragma once

#include <stdexcept>
#include <string>

namespace mexcl {

/// Base of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in different groups, or a value does not fit its component.
struct SpecMismatch : Error {
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (e.g. a negative
/// element passed where the positive cone is required).
struct DomainError : Error {
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

/// A hypothesis (of a construction) was refuted on the scan window.
struct HypothesisError : Error {
  using Error::Error;
};

/// The requested truncation would need infinitely many terms.
struct InfiniteExpansion : Error {
  using Error::Error;
};

/// The operation has no answer for this kind of input.
struct NotApplicable : Error {
  using Error::Error;
};

/// Malformed JSON input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace mexcl
