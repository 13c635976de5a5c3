#pragma once

#include <stdexcept>
#include <string>

namespace uhl {

// Input outside an operation's mathematical domain (|u| > 1, pure state
// where strict positivity is required, non-Hermitian matrix, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Degenerate configuration: antipodal pure pair, inversion pole,
// vanishing denominator.
struct DegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

// Visibility below the floor; the geometric phase carries no information.
struct PhaseUndefinedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A discretized computation drifted past its accuracy threshold.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace uhl
