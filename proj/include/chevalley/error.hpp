#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chevalley {

// Every domain failure carries one of these kinds; the CLI prints the name.
enum class ErrorKind {
  ZeroArgument,
  FieldMismatch,
  PoleAtPoint,
  ConstantFunction,
  NonInvertibleScalar,
  InfiniteOrderSigma,
  InvalidRank,
  NotARoot,
  NotSquare,
  UnknownLabel,
  SingularMatrix,
  IncompatibleField,
  NoSuchSymmetry,
  ExhaustedCandidates,
  ConstantInvariant,
  ParseError,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace chevalley
