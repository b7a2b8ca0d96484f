#pragma once

#include <stdexcept>
#include <string>

namespace tubing {

// Bad input from the caller (maps to CLI exit code 2).
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Request exceeds a size guard (maps to CLI exit code 3).
struct CapacityError : std::length_error {
    explicit CapacityError(const std::string& msg) : std::length_error(msg) {}
};

// A structural property the math guarantees failed to hold.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

// Cell-count guard for exhaustive tableau enumeration. Default 21 = C(7,2);
// the TUBING_MAX_CELLS environment variable overrides it.
int max_enumeration_cells();

}  // namespace tubing
