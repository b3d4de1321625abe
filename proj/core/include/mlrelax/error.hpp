#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlrelax {

enum class ErrorCode {
  EdgeTooSmall,
  VarOutOfRange,
  EmptyEdge,
  TooLarge,
  Infeasible,
  UnsupportedVariable,
  MissingCoordinate,
  UnknownVariable,
  VariableMismatch,
  MalformedFlower,
  RedundantFlower,
  CenterTooLarge,
  SuccessorUnionMismatch,
  ArcNotStrictSubset,
  DuplicateArc,
  NotOfG,
  UnknownNode,
  PathExists,
  InvalidExtraLinearization,
  MonomialNotInHypergraph,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this one exception type; the
// code identifies the contract violation, the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mlrelax
