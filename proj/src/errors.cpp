#include "tt/errors.hpp"

namespace tt {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::NotAFunction: return "NotAFunction";
    case ErrorCode::CannotInfer: return "CannotInfer";
    case ErrorCode::MotiveMismatch: return "MotiveMismatch";
    case ErrorCode::UnknownConstant: return "UnknownConstant";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::IllFormedDeclaration: return "IllFormedDeclaration";
    }
    return "Unknown";
}

} // namespace tt
