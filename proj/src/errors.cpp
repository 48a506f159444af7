#include "errors.hpp"

namespace nilcert {

const char* error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DIVISION_BY_ZERO";
        case ErrorKind::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorKind::Singular: return "SINGULAR";
        case ErrorKind::MultipleRadicals: return "MULTIPLE_RADICALS";
        case ErrorKind::Syntax: return "SYNTAX";
        case ErrorKind::UnknownName: return "UNKNOWN_NAME";
        case ErrorKind::NotInVariety: return "NOT_IN_VARIETY";
        case ErrorKind::Cycle: return "CYCLE";
        case ErrorKind::Io: return "IO";
        case ErrorKind::InvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

}  // namespace nilcert
