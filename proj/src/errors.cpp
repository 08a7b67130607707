#include "uga/errors.hpp"

namespace uga {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::NormExceedsOne: return "NormExceedsOne";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotLeftIdeal: return "NotLeftIdeal";
    case ErrorKind::NotBaer: return "NotBaer";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NeedsFieldExtension: return "NeedsFieldExtension";
    case ErrorKind::NonSquareDimension: return "NonSquareDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDiagonalConstant: return "NotDiagonalConstant";
    case ErrorKind::IdentityProbe: return "IdentityProbe";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::EmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

}  // namespace uga
