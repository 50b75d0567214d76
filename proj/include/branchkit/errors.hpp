#pragma once

#include <stdexcept>
#include <string>

namespace branchkit {

// Invalid input (non-dominant weight, mismatched ranks, malformed label, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Work refused because it exceeds a configured cap (rank cap, degree budget).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A polynomial handed to the decomposer is not a nonnegative integer
// combination of irreducible characters; usually an embedding or truncation bug.
struct NotACharacterError : std::runtime_error {
    explicit NotACharacterError(const std::string& what) : std::runtime_error(what) {}
};

// A spectrum component for which no exact K-type oracle exists.
struct NoKTypeOracleError : std::runtime_error {
    explicit NoKTypeOracleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace branchkit
