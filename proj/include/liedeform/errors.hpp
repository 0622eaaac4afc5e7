#pragma once

#include <stdexcept>
#include <string>

namespace liedeform {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector/matrix shapes or ambient dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A subspace that was required to be an ideal (or central ideal) is not.
class IdealError : public Error {
 public:
  using Error::Error;
};

/// An action is not a Lie algebra action (or not by derivations).
class ActionError : public Error {
 public:
  using Error::Error;
};

/// Crossed-module axioms fail.
class CrossedModuleError : public Error {
 public:
  using Error::Error;
};

/// A map that must be invertible is singular (e.g. contraction parameter s = 0).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Cochain degree outside the supported range.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold on its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A structural formula is not applicable to the given input.
class ApplicabilityError : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog key.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A parsed object failed validation (Jacobi identity, crossed-module axioms).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace liedeform
