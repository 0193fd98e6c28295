#pragma once

#include <stdexcept>
#include <string>

namespace distdist {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on caller-supplied data failed (bad sizes, duplicate or
// misplaced points, unparsable input).
class InputError : public Error {
 public:
  using Error::Error;
};

// An algebraic routine was handed an input outside its domain
// (zero polynomial, wrong degree, constant in the eliminated variable).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

// Two curves that were expected to meet in finitely many points share a
// one-dimensional component.
class InfiniteIntersection : public Error {
 public:
  using Error::Error;
};

// An exact cross-check between two independent counting routes disagreed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A computation was refused because its input exceeds a configured guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace distdist
