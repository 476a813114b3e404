#include "chevalley/error.hpp"

namespace chevalley {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::ConstantFunction: return "ConstantFunction";
    case ErrorKind::NonInvertibleScalar: return "NonInvertibleScalar";
    case ErrorKind::InfiniteOrderSigma: return "InfiniteOrderSigma";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::IncompatibleField: return "IncompatibleField";
    case ErrorKind::NoSuchSymmetry: return "NoSuchSymmetry";
    case ErrorKind::ExhaustedCandidates: return "ExhaustedCandidates";
    case ErrorKind::ConstantInvariant: return "ConstantInvariant";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace chevalley
