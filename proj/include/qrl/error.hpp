#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrl {

enum class ErrorKind {
    InvalidArgument,
    NotAResidue,
    NotARootOfUnity,
    NotSquarefree,
    NotCongruentPlusMinusOne,
    RootMismatch,
    NotSplit,
    Ramified,
    WrongResidueClass,
    NotQuadraticResidue,
    BadPrime,
    DiscMismatch,
    BoundExceeded,
    RegulatorTooLarge,
    StructureError,
    PreconditionFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code contract) can dispatch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAResidue: return "NotAResidue";
    case ErrorKind::NotARootOfUnity: return "NotARootOfUnity";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotCongruentPlusMinusOne: return "NotCongruentPlusMinusOne";
    case ErrorKind::RootMismatch: return "RootMismatch";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::Ramified: return "Ramified";
    case ErrorKind::WrongResidueClass: return "WrongResidueClass";
    case ErrorKind::NotQuadraticResidue: return "NotQuadraticResidue";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::DiscMismatch: return "DiscMismatch";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::RegulatorTooLarge: return "RegulatorTooLarge";
    case ErrorKind::StructureError: return "StructureError";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    }
    return "Unknown";
}

} // namespace qrl
