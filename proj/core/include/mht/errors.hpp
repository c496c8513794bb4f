#pragma once

#include <stdexcept>
#include <string>

namespace mht {

enum class ErrorKind {
    MissingArc,
    DuplicateArc,
    IntraPartArc,
    ArityMismatch,
    BadPartition,
    BadSequence,
    UnsupportedQ,
    TooLarge,
    SpaceTooLarge,
    TooFewSharedArcs,
    ExplicitTieMismatch,
    HypothesisViolated,
    LiftFailed,
    ParseError,
    InvalidParameter,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MissingArc: return "MissingArc";
        case ErrorKind::DuplicateArc: return "DuplicateArc";
        case ErrorKind::IntraPartArc: return "IntraPartArc";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::BadPartition: return "BadPartition";
        case ErrorKind::BadSequence: return "BadSequence";
        case ErrorKind::UnsupportedQ: return "UnsupportedQ";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
        case ErrorKind::TooFewSharedArcs: return "TooFewSharedArcs";
        case ErrorKind::ExplicitTieMismatch: return "ExplicitTieMismatch";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::LiftFailed: return "LiftFailed";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
    }
    return "UnknownError";
}

/// Library-wide exception type; `kind` selects the failure class so callers
/// can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace mht
