#pragma once

#include <stdexcept>
#include <string>

namespace hicat {

// Thrown when an exhaustive enumeration would exceed its size guard. Guards
// exist so accidental parameter blow-ups fail fast instead of running for
// hours; every enumerator takes the guard as an overridable argument.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hicat
