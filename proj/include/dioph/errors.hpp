#pragma once

#include <stdexcept>

namespace dioph {

// Input outside the mathematical domain of an operation (negative radicand,
// odd element where an even one is required, wrong tuple length).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Caller broke a stated precondition (not a Diophantine triple, not a
// solution of P = 0, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed textual number.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Something that cannot happen for valid inputs did happen.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dioph
