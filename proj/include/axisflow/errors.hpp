#pragma once

#include <stdexcept>
#include <string>

namespace axisflow {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A closed-form expression was evaluated at or past its singular time.
struct BlowUpSingularity : Error {
    explicit BlowUpSingularity(const std::string& msg) : Error(msg) {}
};

/// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Sampled initial data violates the required odd/even structure at the axis.
struct ParityViolation : Error {
    explicit ParityViolation(const std::string& msg) : Error(msg) {}
};

/// Time step too large for the current velocity field.
struct CFLViolation : Error {
    explicit CFLViolation(const std::string& msg) : Error(msg) {}
};

/// A field picked up a NaN or Inf during time stepping.
struct NonFiniteField : Error {
    explicit NonFiniteField(const std::string& msg) : Error(msg) {}
};

/// An elliptic solve did not reach its residual tolerance.
struct SolverDivergence : Error {
    explicit SolverDivergence(const std::string& msg) : Error(msg) {}
};

/// Name does not match any verifiable axis identity.
struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& msg) : Error(msg) {}
};

/// Config document is not syntactically valid.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Config document parsed but a field is missing or out of range.
struct ValidationError : Error {
    ValidationError(std::string field_name, const std::string& msg)
        : Error(msg), field(std::move(field_name)) {}
    std::string field;
};

}  // namespace axisflow
