#include "ecirr/error.hpp"

namespace ecirr {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kOk: return "Ok";
        case ErrorCode::kNotPrime: return "NotPrime";
        case ErrorCode::kReducibleModulus: return "ReducibleModulus";
        case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
        case ErrorCode::kContextMismatch: return "ContextMismatch";
        case ErrorCode::kDivisionByZero: return "DivisionByZero";
        case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
        case ErrorCode::kBothZero: return "BothZero";
        case ErrorCode::kDegreeZero: return "DegreeZero";
        case ErrorCode::kPointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::kSingularCurve: return "SingularCurve";
        case ErrorCode::kOrderMismatch: return "OrderMismatch";
        case ErrorCode::kNotDivisible: return "NotDivisible";
        case ErrorCode::kDegenerateAlpha: return "DegenerateAlpha";
        case ErrorCode::kNotInOrder: return "NotInOrder";
        case ErrorCode::kSubfieldMismatch: return "SubfieldMismatch";
        case ErrorCode::kNodeNotFound: return "NodeNotFound";
        case ErrorCode::kIrreducibilityViolation: return "IrreducibilityViolation";
        case ErrorCode::kExhaustedChoices: return "ExhaustedChoices";
        case ErrorCode::kFactorizationFailed: return "FactorizationFailed";
        case ErrorCode::kNotCoprime: return "NotCoprime";
        case ErrorCode::kInvalidArgument: return "InvalidArgument";
        case ErrorCode::kParse: return "Parse";
        case ErrorCode::kIo: return "Io";
        case ErrorCode::kInternal: return "Internal";
    }
    return "Unknown";
}

}  // namespace ecirr
