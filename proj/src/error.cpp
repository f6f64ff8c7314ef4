#include "spechtkit/error.hpp"

namespace spechtkit {

const char* error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorCode::NegativePart: return "NegativePart";
    case ErrorCode::NodeOutsideDiagram: return "NodeOutsideDiagram";
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::NotQuotientSeparated: return "NotQuotientSeparated";
    case ErrorCode::NotSelfConjugate: return "NotSelfConjugate";
    case ErrorCode::NotRestricted: return "NotRestricted";
    case ErrorCode::CoreWeightMismatch: return "CoreWeightMismatch";
    case ErrorCode::NotRouquier: return "NotRouquier";
    case ErrorCode::NotRestrictedQuotient: return "NotRestrictedQuotient";
    case ErrorCode::ShapeTypeMismatch: return "ShapeTypeMismatch";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::ChainMismatch: return "ChainMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace spechtkit
