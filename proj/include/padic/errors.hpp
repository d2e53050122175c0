#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// Every failure mode carries a stable name so callers (and the CLI report
// envelope) can match on it without parsing message text.
enum class ErrorCode {
    ZeroDenominator,
    PrimeMismatch,
    DivisionByZeroToPrecision,
    ZeroToPrecision,
    InsufficientPrecision,
    NotASquare,
    DomainError,
    ZeroResidue,
    NonResidue,
    ZeroCoupling,
    UnequalCouplings,
    DepthLimit,
    ModeUnavailable,
    DegeneratePartition,
    DenominatorZeroToPrecision,
    InconsistentField,
    DegenerateDiscriminant,
    FieldUnavailable,
    InternalInconsistency,
};

// Sub-reason attached to NotASquare.
enum class SquareObstruction {
    None,
    OddValuation,
    NonResidue,
    TwoAdicObstruction,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::PrimeMismatch: return "PrimeMismatch";
        case ErrorCode::DivisionByZeroToPrecision: return "DivisionByZeroToPrecision";
        case ErrorCode::ZeroToPrecision: return "ZeroToPrecision";
        case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorCode::NotASquare: return "NotASquare";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ZeroResidue: return "ZeroResidue";
        case ErrorCode::NonResidue: return "NonResidue";
        case ErrorCode::ZeroCoupling: return "ZeroCoupling";
        case ErrorCode::UnequalCouplings: return "UnequalCouplings";
        case ErrorCode::DepthLimit: return "DepthLimit";
        case ErrorCode::ModeUnavailable: return "ModeUnavailable";
        case ErrorCode::DegeneratePartition: return "DegeneratePartition";
        case ErrorCode::DenominatorZeroToPrecision: return "DenominatorZeroToPrecision";
        case ErrorCode::InconsistentField: return "InconsistentField";
        case ErrorCode::DegenerateDiscriminant: return "DegenerateDiscriminant";
        case ErrorCode::FieldUnavailable: return "FieldUnavailable";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "UnknownError";
}

inline const char* obstruction_name(SquareObstruction o) {
    switch (o) {
        case SquareObstruction::None: return "None";
        case SquareObstruction::OddValuation: return "OddValuation";
        case SquareObstruction::NonResidue: return "NonResidue";
        case SquareObstruction::TwoAdicObstruction: return "TwoAdicObstruction";
    }
    return "None";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          SquareObstruction obstruction = SquareObstruction::None)
        : std::runtime_error(std::string(error_name(code)) + ": " + message),
          code_(code),
          obstruction_(obstruction) {}

    ErrorCode code() const { return code_; }
    const char* name() const { return error_name(code_); }
    SquareObstruction obstruction() const { return obstruction_; }

private:
    ErrorCode code_;
    SquareObstruction obstruction_;
};

} // namespace padic
