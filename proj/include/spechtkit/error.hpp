#pragma once

#include <stdexcept>
#include <string>

namespace spechtkit {

enum class ErrorCode {
    NotWeaklyDecreasing,
    NegativePart,
    NodeOutsideDiagram,
    InvalidPrime,
    NotQuotientSeparated,
    NotSelfConjugate,
    NotRestricted,
    CoreWeightMismatch,
    NotRouquier,
    NotRestrictedQuotient,
    ShapeTypeMismatch,
    ConstraintViolated,
    NonTerminating,
    ChainMismatch,
    PreconditionViolated,
    UnknownSuite,
    ParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace spechtkit
