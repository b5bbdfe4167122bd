#pragma once

#include <stdexcept>
#include <string>

namespace phaserank {

/// Input outside an operation's domain (bad shape, empty set, non-finite value).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A hard size cap was exceeded (factorial or exponential enumeration, solver size).
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// A numerical solver failed to converge.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Something that is mathematically guaranteed did not happen.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace phaserank
