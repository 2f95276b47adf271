#ifndef PITREE_ERRORS_HPP
#define PITREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pitree {

// Base of everything the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: files, out-of-domain parameters, ill-shaped arguments.
struct InputError : Error {
    using Error::Error;
};

// An enforced size or expansion budget was exceeded; never a value.
struct BudgetError : Error {
    using Error::Error;
};

// The omega < t assumption failed at a base level of the recursion.
struct PreconditionError : Error {
    using Error::Error;
};

// A callback broke its contract (checked by verifying its outputs).
struct ContractError : Error {
    using Error::Error;
};

// An engine invariant failed at runtime; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace pitree

#endif // PITREE_ERRORS_HPP
