#pragma once

#include <stdexcept>
#include <string>

namespace qdio {

/// Requested state width exceeds the configured memory guard (or is zero).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& message) : std::runtime_error(message) {}
};

/// Solutions make up at least half the search space, so the standard
/// diffuser cannot amplify them. Raised unless the caller forces the run.
class DiffuserConditionError : public std::runtime_error {
 public:
  explicit DiffuserConditionError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace qdio
