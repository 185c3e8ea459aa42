#pragma once

#include <stdexcept>
#include <string>

namespace bwalk {

/// Raised when a requested computation exceeds the configured resource
/// budget (e.g. enumerating a search space that is too large). The CLI
/// maps this to its own exit code, distinct from plain validation errors.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bwalk
