#pragma once

#include <stdexcept>
#include <string>

namespace zgu {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad cyclotomic data: nonpositive or oversized conductor.
struct InvalidConductorError : Error {
    using Error::Error;
};

// galois(a, k) with gcd(k, conductor) != 1.
struct InvalidAutomorphismError : Error {
    using Error::Error;
};

// trace_to_rationals on a value outside the requested subfield.
struct NotInSubfieldError : Error {
    using Error::Error;
};

// Character table fails a structural invariant; message names the culprit.
struct ValidationError : Error {
    using Error::Error;
};

// Caller broke an operation precondition (bad order, missing Brauer block, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Enumeration exceeded its node budget.
struct ResourceLimitError : Error {
    using Error::Error;
};

}  // namespace zgu
