#pragma once

#include <stdexcept>
#include <string>

namespace fxc {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Value outside the operation's domain: mismatched radicands, a product that
// escapes the half-integer lattice, an inverse of a non-unimodular matrix.
struct DomainError : Error {
    using Error::Error;
};

// Discriminant with no packaged group data.
struct UnsupportedGroupError : Error {
    using Error::Error;
};

// Reduction failed to reach the fundamental domain within the iteration budget.
struct NonTerminationError : Error {
    using Error::Error;
};

// Requested base point does not lie in the open fundamental domain.
struct CenterNotInteriorError : Error {
    using Error::Error;
};

// Constellation construction produced two identical points.
struct DuplicatePointError : Error {
    using Error::Error;
};

// Tuple has no preimage under the unit parametrization within search bounds.
struct NotInImageError : Error {
    using Error::Error;
};

// Malformed CLI input, config file, or sample stream.
struct ParseError : Error {
    using Error::Error;
};

} // namespace fxc
