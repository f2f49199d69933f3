#pragma once

#include <stdexcept>
#include <string>

namespace gapart {

/// A documented precondition of an operation does not hold for its input.
/// The message names the violated condition, e.g. "requires L >= 2s^3+5s^2+1".
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal identity that must hold by construction fails.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gapart
