#include "fdalg/errors.hpp"

namespace fdalg {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::IdempotentsRequired: return "IdempotentsRequired";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::EmptySpan: return "EmptySpan";
    case ErrorKind::DualNotInvertible: return "DualNotInvertible";
    case ErrorKind::NotQuasiFrobenius: return "NotQuasiFrobenius";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotBimoduleMorphism: return "NotBimoduleMorphism";
    case ErrorKind::NotAssociativeMorphism: return "NotAssociativeMorphism";
    case ErrorKind::InvalidC: return "InvalidC";
    case ErrorKind::BadParams: return "BadParams";
  }
  return "Error";
}

}  // namespace fdalg
