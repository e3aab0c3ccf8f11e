#pragma once
#include <stdexcept>
#include <string>

namespace nldirac {

// Invalid user-supplied configuration or parameters (CLI exit code 1).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A simulation produced non-finite values (CLI exit code 2).
struct BlowUpError : std::runtime_error {
    explicit BlowUpError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was invoked outside its domain of validity.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace nldirac
