#pragma once

#include <stdexcept>
#include <string>

namespace halg {

/// Operands live in different ambient spaces (exponent lengths, free module ranks, rings).
struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A sum or a matrix mixes total degrees.
struct HomogeneityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of the operation (inverse of zero, j out of range, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An input promised by the caller does not hold (composite of a "complex" is non-zero, ...).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Internal consistency check failed; always an engine bug.
struct EngineError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace halg
