// rotfuse: error type raised on invalid rotation inputs.

#pragma once

#include <stdexcept>
#include <string>

namespace rotfuse {

/// Thrown when an input violates a documented validity requirement
/// (non-unit quaternion, non-orthonormal matrix, out-of-range angles,
/// singular configurations where an operation is undefined).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rotfuse
