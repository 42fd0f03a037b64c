#pragma once

#include <stdexcept>
#include <string>

namespace nervelab {

/// Raised when an input value violates a structural precondition
/// (duplicate vertices in a facet, unknown piece name, bad JSON shape).
class MalformedInput : public std::runtime_error {
public:
    explicit MalformedInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a search exceeds its configured size cap.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nervelab
