#pragma once

#include <stdexcept>
#include <string>

namespace liejordan {

/// Malformed or out-of-contract input. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size guard was hit. Maps to CLI exit code 3.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liejordan
