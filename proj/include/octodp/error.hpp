#pragma once

#include <stdexcept>
#include <string>

namespace octodp {

/// A mathematical precondition of an operation does not hold for the given
/// input (inadmissible moduli, composite prime, skew lines where a plane was
/// requested, ...). The CLI maps this to exit status 1.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. This signals a bug, never bad input.
/// The CLI maps this to exit status 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace octodp
