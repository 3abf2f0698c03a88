#pragma once

#include <stdexcept>
#include <string>

namespace pcsp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configured size budget was hit (power domains, subset counts, gadget sums).
struct BudgetExceeded : Error {
    using Error::Error;
};

// Search tree exceeded the node limit; the caller must raise the budget.
struct NodeLimitExceeded : Error {
    using Error::Error;
};

// More solutions than the enumeration cap allows.
struct EnumerationCapExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Bad inputs: arity mismatches, failed embedding validation, wrong template.
struct InvalidArgument : Error {
    using Error::Error;
};

// Internal: fixed-width exact arithmetic overflowed; solvers retry with
// arbitrary precision.
struct ArithmeticOverflow : Error {
    using Error::Error;
};

} // namespace pcsp
