#pragma once

#include <stdexcept>
#include <string>

namespace simplefold {

/// A caller broke an operation's documented precondition (for example asked
/// an assigned-only routine about a pattern with unassigned creases).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A fold or reduction that is not legal on the given pattern.
class InvalidOperation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace simplefold
