#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uniton {

enum class ErrorKind {
  NonRationalAntiderivative,
  SizeMismatch,
  ExactKindUnsupported,
  PoleAtZ,
  ZeroLambda,
  SingularAtMinusOne,
  NotInvertibleLoop,
  InvalidType,
  UnrecognizedSubsystem,
  NotNilpotent,
  DegenerateFrame,
  EmptySubset,
  OddSlotData,
  SingularOnCircle,
  NoConvergence,
  NonMonomialDeterminant,
  NotCanonical,
  NotInBigCellForm,
  NotS1Invariant,
  SchemaError,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit status and a JSON error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonRationalAntiderivative: return "NonRationalAntiderivative";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ExactKindUnsupported: return "ExactKindUnsupported";
    case ErrorKind::PoleAtZ: return "PoleAtZ";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::SingularAtMinusOne: return "SingularAtMinusOne";
    case ErrorKind::NotInvertibleLoop: return "NotInvertibleLoop";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::UnrecognizedSubsystem: return "UnrecognizedSubsystem";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::OddSlotData: return "OddSlotData";
    case ErrorKind::SingularOnCircle: return "SingularOnCircle";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonMonomialDeterminant: return "NonMonomialDeterminant";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::NotInBigCellForm: return "NotInBigCellForm";
    case ErrorKind::NotS1Invariant: return "NotS1Invariant";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace uniton
