#ifndef NLK_ERROR_HPP
#define NLK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nlk {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension (or arity).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input that violates its precondition
/// (not an ideal, not isotropic, parameter out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: scalars, vectors, algebra files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computed invariant contradicts what the classification theorem
/// guarantees; the input is outside its hypotheses or there is a bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A construction produced an object that fails its own post-checks.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlk

#endif  // NLK_ERROR_HPP
